#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treedep/rational.hpp"

namespace treedep {

using TreeCount = BigInt;

// Parameters of one complete-bipartite block K_{r,s}: r = |X|, s = |Y|.
// The block's key edge joins a fixed u in X to a fixed v in Y.
struct BipartiteBlockParams {
  std::int64_t r = 1;
  std::int64_t s = 1;
};

// Position of a block edge relative to the block's key edge uv: the key edge
// itself, a non-key edge through u, a non-key edge through v, or an edge
// avoiding both key vertices.
enum class EdgeClass { Key, Type1AtU, Type1AtV, Type2 };

// Vertex counts of a subtree of K_{r,s}: m on the X side, n on the Y side.
struct SubtreeProfile {
  std::int64_t m = 0;
  std::int64_t n = 0;
};

// A necklace block reduced to the two quantities the necklace formulas need:
// its spanning tree count and the local density of its key edge.
struct NecklaceBlock {
  TreeCount tau;
  BigRat key_density;
};

// tau(K_{r,s}) = r^{s-1} * s^{r-1}.
TreeCount tau_complete_bipartite(std::int64_t r, std::int64_t s);

// Every edge of a connected edge-transitive graph has density (n-1)/m.
BigRat density_edge_transitive(std::int64_t n_vertices, std::int64_t m_edges);

// Spanning trees of K_{r,s} containing a fixed subtree with m vertices in X
// and n in Y: (m s + n r - m n) * r^{s-n-1} * s^{r-m-1}.  The count depends
// only on (m, n), not on the subtree's shape.  Evaluated over rationals so
// negative exponents are harmless; the result is asserted integral.
TreeCount gd_tree_count(std::int64_t r, std::int64_t s, const SubtreeProfile& profile);

// Spanning trees of K_{r,s} containing a fixed matching of size l:
// (r+s)^{l-1} * (r+s-l) * r^{s-l-1} * s^{r-l-1}, same evaluation policy.
TreeCount gd_matching_count(std::int64_t r, std::int64_t s, std::int64_t l);

// Necklace of n >= 2 blocks: tau(G) = prod tau_i * sum d_i.
TreeCount necklace_tau(const std::vector<NecklaceBlock>& blocks);

// Trees of the necklace through a non-key edge xy of block k (0-based), given
// that block's thicket count b_k = b(xy; u_k, v_k) and local density d(xy):
//   tau_G(xy) = prod tau_i * [ b_k / tau_k + d(xy) * sum_{i != k} d_i ].
TreeCount necklace_tau_edge(const std::vector<NecklaceBlock>& blocks, std::size_t k,
                            const TreeCount& b_k, const BigRat& d_xy);

// The same per-edge count specialized to a necklace of complete-bipartite
// blocks, where the bracket collapses to
//   d_k * sum_i d_i - c / (r_k^2 s_k^2)
// with d_i = (r_i + s_i - 1)/(r_i s_i) and correction c = (r_k - 1)^2,
// (s_k - 1)^2, or 1 for Type1AtU / Type1AtV / Type2 edges respectively.
TreeCount bipartite_type_edge_tau(const std::vector<BipartiteBlockParams>& blocks,
                                  std::size_t k, EdgeClass cls);

// Generalized theta graph: two hubs joined by internally disjoint paths of
// lengths r_1..r_n.  tau = prod r_i * sum 1/r_i, and for an edge on path k
// tau(e_k) = prod r_i * (sum_i 1/r_i - (1/r_k) * sum_{i != k} 1/r_i).
TreeCount theta_tau(const std::vector<std::int64_t>& r_list);
TreeCount theta_tau_edge(const std::vector<std::int64_t>& r_list, std::size_t k);

// Closed forms for the gadget H_r: a key edge plus r disjoint length-2 paths
// between the key vertices.  H_0 is the bare key edge (tau = 1, key density 1,
// no non-key edges).
struct HGadgetForms {
  TreeCount tau;
  BigRat key_density;
  std::optional<BigRat> nonkey_density;     // absent when r = 0
  std::optional<TreeCount> thicket_nonkey;  // b(nonkey; u, v); absent when r = 0
};
HGadgetForms h_gadget_forms(std::int64_t r);

}  // namespace treedep
