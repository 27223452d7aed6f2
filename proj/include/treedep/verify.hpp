#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "treedep/constructions.hpp"
#include "treedep/kirchhoff.hpp"
#include "treedep/multigraph.hpp"
#include "treedep/rational.hpp"

namespace treedep {

// Hard ceilings for the brute-force oracles. Past these, the determinant is
// the authority and the closed forms cross-check each other.
struct OracleBudget {
  int max_vertices = 9;
  std::int64_t max_edge_units = 18;
  std::uint64_t max_trees = 1'000'000;
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Deletion–contraction tree count with bundle expansion:
// tau(G) = tau(G - B) + m * tau(G / B) for a bundle B of m parallel units.
TreeCount enumerate_spanning_trees(const Multigraph& g, const OracleBudget& budget = {});

// Same recursion with one unit of each listed record pinned into the tree
// (records may repeat; a repeated record forces a cycle and yields 0).
TreeCount enumerate_spanning_trees_containing(const Multigraph& g,
                                              const std::vector<std::size_t>& pinned,
                                              const OracleBudget& budget = {});

// Independent route: enumerate unit subsets of size |V|-1 and keep the
// acyclic ones. If `trees` is non-null, each tree is appended as the sorted
// record indices of its units (parallel units repeat their record index).
TreeCount subset_count_spanning_trees(const Multigraph& g, const OracleBudget& budget = {},
                                      std::vector<std::vector<std::size_t>>* trees = nullptr);

// Spanning 2-forests that separate u and v and contain one designated unit of
// record `pinned`, by subset enumeration over |V|-2 units.
TreeCount subset_count_separating_forests(const Multigraph& g, int u, int v,
                                          std::size_t pinned,
                                          const OracleBudget& budget = {});

// Seeded random connected multigraphs inside the budget: a random spanning
// tree plus random extra units, some as parallel records, some as bumped
// multiplicities.
Multigraph random_connected_multigraph(std::mt19937_64& rng, const OracleBudget& budget = {});
std::vector<Multigraph> oracle_corpus(std::uint64_t seed, std::size_t count,
                                      const OracleBudget& budget = {});

struct PropertyOutcome {
  std::string property;
  std::string instance;
  bool pass = true;
  std::string witness;  // JSON text reproducing the failure; empty on pass
};

// Densities over all edge units of a connected graph sum to |V| - 1, exactly.
PropertyOutcome check_foster(const Multigraph& g, const std::string& instance);

// For a theta graph and its bundle-cycle dual, every edge pair has densities
// summing to exactly 1.
PropertyOutcome check_dual_identity(const std::vector<std::int64_t>& theta_params);

// For a graph certified simple and planar by construction: |E| <= 3|V| - 6,
// dep >= (|V|-1)/|E|, and dep > 1/3. Throws if a parallel bundle is present.
PropertyOutcome check_planar_bound(const Multigraph& g, const std::string& instance);

// Key edges of a necklace are ordered globally exactly as their block-local
// densities are ordered (both directions of the equivalence, exact).
PropertyOutcome check_key_ordering(const Construction& necklace);

// One line per distinct property: "property <TAB> instances <TAB> failures".
std::string summarize_tsv(const std::vector<PropertyOutcome>& outcomes);

// Checks a construction's recipe claim. Graphs up to `determinant_gate`
// vertices are confirmed by a full density report; larger ones through the
// exact closed forms of their family (which the forms suite grounds against
// determinants at small scale).
struct ClaimCheck {
  bool pass = false;
  std::string method;  // "determinant" or "closed-form"
  std::string detail;  // failure explanation; empty on pass
};
ClaimCheck verify_construction_claim(const Construction& c, int determinant_gate = 300);

// Exact Foster check routed the same way as verify_construction_claim.
PropertyOutcome check_foster_construction(const Construction& c, int determinant_gate = 300);

// Compares the family closed forms against the determinant, edge by edge.
PropertyOutcome check_forms_agreement(const Construction& c);

// Named property suites backing the CLI `verify` subcommands and the
// acceptance criteria.
std::vector<PropertyOutcome> run_oracle_suite(std::uint64_t seed, std::size_t count,
                                              const OracleBudget& budget = {});
std::vector<PropertyOutcome> run_foster_suite(std::uint64_t seed, std::size_t count);
std::vector<PropertyOutcome> run_dual_suite(int max_q);
std::vector<PropertyOutcome> run_bound_suite(std::uint64_t seed);
std::vector<PropertyOutcome> run_forms_suite();

// The reduced fractions each construction sweep covers.
std::vector<TargetRational> reduced_fractions(int max_q);          // all 0 < p/q < 1
std::vector<TargetRational> reduced_fractions_above_half(int max_q);  // 1/2 < p/q < 1

}  // namespace treedep
