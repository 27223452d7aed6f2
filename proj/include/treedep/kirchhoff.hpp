#pragma once

#include "treedep/multigraph.hpp"
#include "treedep/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <vector>

namespace treedep {

// Spanning tree counts are plain non-negative big integers; parallel units of
// a bundle count as distinct edges, matching the weighted matrix-tree theorem.
using TreeCount = BigInt;

// Combinatorial Laplacian with bundle multiplicities as integer weights.
IntMatrix laplacian(const Multigraph& g);

// Number of spanning trees, by fraction-free determinant of the reduced
// Laplacian. Disconnected graphs yield 0.
TreeCount tau(const Multigraph& g);

// Spanning trees containing one fixed unit of the bundle at `index`,
// computed as tau(G/e).
TreeCount tau_edge(const Multigraph& g, std::size_t index);

// tau_edge / tau for a single edge.
BigRat density(const Multigraph& g, std::size_t index);

struct EdgeDensity {
  std::size_t edge = 0;  // record index
  int u = 0;
  int v = 0;
  std::int64_t multiplicity = 1;
  TreeCount tau_e;
  BigRat density;
};

struct DensityReport {
  TreeCount tau;
  std::vector<EdgeDensity> per_edge;  // one entry per record; units share a density
  BigRat dep;                         // max density
  std::vector<std::size_t> argmax_edges;  // ascending record indices attaining dep
};

// Exact densities for every edge of a connected graph. One adjugate of the
// reduced Laplacian serves all edges: for e = uv,
//   tau_G(e) = tau * Omega(u, v) = C(u,u) + C(v,v) - 2 C(u,v)
// with C the adjugate and the removed reference row/column read as zero.
DensityReport density_report(const Multigraph& g);

// Spanning 2-component forests that separate u from v and contain one fixed
// unit of the bundle at `index`. An edge joining u and v itself can never lie
// in such a forest, so that case returns 0 by convention.
TreeCount thicket_count(const Multigraph& g, std::size_t index, int u, int v);

// Effective resistance with unit resistors: tau(G with u,v identified) / tau(G).
BigRat resistance(const Multigraph& g, int u, int v);

nlohmann::json to_json(const DensityReport& report);

}  // namespace treedep
