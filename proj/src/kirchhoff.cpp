#include "treedep/kirchhoff.hpp"

#include "treedep/bareiss.hpp"

#include <stdexcept>

namespace treedep {

IntMatrix laplacian(const Multigraph& g) {
  const int n = g.vertex_count();
  IntMatrix lap = IntMatrix::Zero(n, n);
  for (const auto& e : g.edges()) {
    const BigInt w = e.multiplicity;
    lap(e.u, e.u) += w;
    lap(e.v, e.v) += w;
    lap(e.u, e.v) -= w;
    lap(e.v, e.u) -= w;
  }
  return lap;
}

TreeCount tau(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 1) return 1;
  IntMatrix reduced = laplacian(g).topLeftCorner(n - 1, n - 1);
  return bareiss_determinant_in_place(reduced);
}

TreeCount tau_edge(const Multigraph& g, std::size_t index) {
  return tau(contract(g, index));
}

BigRat density(const Multigraph& g, std::size_t index) {
  const TreeCount total = tau(g);
  if (total == 0) throw std::invalid_argument("density is undefined on a disconnected graph");
  return make_rational(tau_edge(g, index), total);
}

DensityReport density_report(const Multigraph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) throw std::invalid_argument("density report needs at least one edge");
  if (!is_connected(g)) throw std::invalid_argument("density report needs a connected graph");

  // Reference vertex n-1 gets removed; its adjugate entries read as 0.
  const IntMatrix reduced = laplacian(g).topLeftCorner(n - 1, n - 1);
  BigInt det;
  const IntMatrix cof = fraction_free_adjugate(reduced, det);
  auto cof_at = [&](int a, int b) -> BigInt {
    if (a == n - 1 || b == n - 1) return 0;
    return cof(a, b);
  };

  DensityReport report;
  report.tau = det;
  report.per_edge.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    BigInt tau_e = cof_at(e.u, e.u) + cof_at(e.v, e.v) - 2 * cof_at(e.u, e.v);
    BigRat d = make_rational(tau_e, det);
    if (d <= 0 || d > 1) throw std::logic_error("edge density escaped (0, 1]");
    report.per_edge.push_back(EdgeDensity{i, e.u, e.v, e.multiplicity, std::move(tau_e), std::move(d)});
  }

  report.dep = report.per_edge.front().density;
  for (const auto& ed : report.per_edge)
    if (ed.density > report.dep) report.dep = ed.density;
  for (const auto& ed : report.per_edge)
    if (ed.density == report.dep) report.argmax_edges.push_back(ed.edge);
  return report;
}

TreeCount thicket_count(const Multigraph& g, std::size_t index, int u, int v) {
  const auto& e = g.edge(index);
  if (u == v) throw std::invalid_argument("thicket endpoints must differ");
  const int a = std::min(u, v);
  const int b = std::max(u, v);
  if (e.u == a && e.v == b) return 0;  // a u-v edge can never separate u from v

  const IdentifyResult merged = identify_with_map(g, u, v);
  const auto image = merged.edge_map[index];
  if (!image) throw std::logic_error("edge unexpectedly collapsed during identification");
  return tau_edge(merged.graph, *image);
}

BigRat resistance(const Multigraph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("resistance endpoints must differ");
  const TreeCount total = tau(g);
  if (total == 0) throw std::invalid_argument("resistance is undefined on a disconnected graph");
  return make_rational(tau(identify(g, u, v)), total);
}

nlohmann::json to_json(const DensityReport& report) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& ed : report.per_edge) {
    edges.push_back({{"u", ed.u},
                     {"v", ed.v},
                     {"mult", ed.multiplicity},
                     {"tau_e", ed.tau_e.str()},
                     {"density", to_fraction_string(ed.density)}});
  }
  return nlohmann::json{{"tau", report.tau.str()},
                        {"edges", std::move(edges)},
                        {"dep", to_fraction_string(report.dep)},
                        {"argmax", report.argmax_edges}};
}

}  // namespace treedep
