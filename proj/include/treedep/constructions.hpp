#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "treedep/multigraph.hpp"
#include "treedep/rational.hpp"

namespace treedep {

// A reduced fraction 0 < p/q < 1.
struct TargetRational {
  std::int64_t p = 1;
  std::int64_t q = 2;
};

// Normalizes to lowest terms; rejects anything outside 0 < p < q.
TargetRational normalize_target(std::int64_t p, std::int64_t q);
TargetRational parse_target(const std::string& text);  // "p/q"

enum class Family { BipartiteNecklace, ThetaDensity, ThetaDualMultigraph, HNecklace };
enum class ClaimKind { Density, Dependence };
enum class Strategy { Greedy, Uniform };

std::string family_name(Family family);
Strategy parse_strategy(const std::string& text);

// What a construction promises about its output, plus the parameters needed
// to rebuild it from scratch.
struct Recipe {
  Family family = Family::BipartiteNecklace;
  std::int64_t p = 1;
  std::int64_t q = 2;
  std::vector<std::int64_t> params;  // t_i (bipartite) or r_i (theta/H families)
  std::size_t key_edge = 0;          // edge index the claim points at
  ClaimKind claim_kind = ClaimKind::Dependence;
  BigRat claim_value;
  std::string theorem;  // provenance tag, part of the recipe wire format
};

nlohmann::json to_json(const Recipe& recipe);

// Term shapes the decompositions work with: 1/t or 2/(r+2).
enum class TermShape { Reciprocal, Shifted };

enum class Parity { Even, Odd };

struct DecompositionConstraint {
  BigRat target;  // > 0
  TermShape term_shape = TermShape::Reciprocal;
  std::int64_t lower_bound = 1;
  std::optional<Parity> term_count_parity;  // parity of the number of terms
};

// Finds t_1..t_k with sum term(t_i) = target exactly and every t_i >=
// lower_bound.  Greedy repeatedly takes the largest admissible term; uniform
// emits one fixed term size a closed formula provides.  A demanded parity is
// restored by splitting the smallest t into two doubled copies.
std::vector<std::int64_t> decompose(const DecompositionConstraint& constraint,
                                    Strategy strategy);

// Which global vertices and edges realize one block of a construction (a
// necklace block, a theta path, or a dual bundle).
struct BlockLayout {
  std::size_t key_edge = 0;        // the block's key edge (or the path's first edge)
  int u = 0;                       // key vertices / hub endpoints
  int v = 0;
  std::vector<int> internal;       // non-hub vertices of the block
  int internal_x = 0;              // bipartite blocks: prefix of `internal` on the X side
  std::vector<std::size_t> edges;  // every edge index of the block, key edge included
};

struct Construction {
  Multigraph graph;
  Recipe recipe;
  std::vector<BlockLayout> blocks;
};

// Plain assemblers, parameterized directly. Key edges carry labels "key:i".
Multigraph make_complete_bipartite(int r, int s);
Construction assemble_bipartite_necklace(const std::vector<std::int64_t>& t_list);
Construction assemble_h_necklace(const std::vector<std::int64_t>& r_list);
Construction assemble_theta(const std::vector<std::int64_t>& r_list);
Construction assemble_theta_dual(const std::vector<std::int64_t>& r_list);

// Compilers from a target fraction to a graph family. Each re-validates its
// sum constraint in exact arithmetic and fills in the Recipe claim.
Construction build_bipartite_necklace(const TargetRational& target,
                                      Strategy strategy = Strategy::Greedy);
Construction build_theta(const TargetRational& target,
                         Strategy strategy = Strategy::Greedy);
Construction build_theta_dual(const TargetRational& target,
                              Strategy strategy = Strategy::Greedy);
Construction build_h_necklace(const TargetRational& target,
                              Strategy strategy = Strategy::Greedy);

struct PlanarSearchHit {
  Multigraph graph;
  BigRat dep;
};

// Best-effort randomized hunt for simple planar graphs whose dependence lies
// in (lo, hi]: grows stacked triangulations face by face, then thins them
// with random connectivity-preserving edge deletions.
std::vector<PlanarSearchHit> search_planar_dep(int max_vertices, std::int64_t max_edges,
                                               const BigRat& lo, const BigRat& hi,
                                               int trials = 200, std::uint64_t seed = 1);

}  // namespace treedep
