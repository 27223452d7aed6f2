#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace treedep {

// One bundle of parallel edges between two distinct vertices. Endpoints are
// stored ordered (u < v). Self-loops are never stored; contraction drops them.
struct EdgeRecord {
  int u = 0;
  int v = 0;
  std::int64_t multiplicity = 1;
  std::string label;

  bool operator==(const EdgeRecord&) const = default;
};

// Immutable-after-construction multigraph on vertices 0..n-1. All operations
// below return new graphs, so values can be shared freely across threads.
class Multigraph {
 public:
  explicit Multigraph(int vertex_count);

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::int64_t edge_units() const;
  const std::vector<EdgeRecord>& edges() const { return edges_; }
  const EdgeRecord& edge(std::size_t index) const;

  // Appends a bundle. Endpoints are normalized to u < v; u == v is rejected.
  void add_edge(int u, int v, std::int64_t multiplicity = 1, std::string label = {});

 private:
  int vertex_count_;
  std::vector<EdgeRecord> edges_;
};

// Result of identifying two vertices: the new graph plus, per original edge
// record, the index of its image (nullopt when it collapsed to a loop).
// Bundles that end up parallel are merged, multiplicities adding up.
struct IdentifyResult {
  Multigraph graph;
  std::vector<std::optional<std::size_t>> edge_map;
};

IdentifyResult identify_with_map(const Multigraph& g, int u, int v);

// G/e: endpoints of edge `index` identified, loops dropped. |V| shrinks by 1;
// the higher vertex index collapses into the lower and ids above shift down.
Multigraph contract(const Multigraph& g, std::size_t index);

// As contract, but for an arbitrary (possibly non-adjacent) vertex pair.
Multigraph identify(const Multigraph& g, int u, int v);

// Removes one unit of the bundle at `index`; the record disappears at zero.
Multigraph delete_unit(const Multigraph& g, std::size_t index);

bool is_connected(const Multigraph& g);

// 2-coloring (0/1 per vertex) if the graph is bipartite, nullopt otherwise.
std::optional<std::vector<int>> bipartition(const Multigraph& g);

// No bundle of multiplicity > 1 and no two records on the same vertex pair.
bool is_simple(const Multigraph& g);

// First record joining u and v, if any.
std::optional<std::size_t> find_edge(const Multigraph& g, int u, int v);

// Text format: first non-comment line is the vertex count; every following
// line is "u v m" with 0 <= u < v < n and m >= 1, plus an optional label
// token. '#' starts a comment.
Multigraph parse_graph(const std::string& text);
std::string serialize_graph(const Multigraph& g);

Multigraph read_graph_file(const std::string& path);

}  // namespace treedep
