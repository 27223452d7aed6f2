#include "treedep/constructions.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "treedep/kirchhoff.hpp"

namespace treedep {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::int64_t ceil_div64(std::int64_t num, std::int64_t den) {
  return (num + den - 1) / den;  // positive operands only
}

// Floor division for a possibly negative numerator and a positive denominator.
std::int64_t floor_div64(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::int64_t to_int64(const BigInt& x, const char* context) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error(std::string(context) + ": value out of 64-bit range");
  return x.convert_to<std::int64_t>();
}

BigInt ceil_div_big(const BigInt& num, const BigInt& den) {
  return (num + den - 1) / den;  // positive operands only
}

BigRat term_value(TermShape shape, std::int64_t t) {
  return shape == TermShape::Shifted ? make_rational(BigInt(2), BigInt(t) + 2)
                                     : make_rational(BigInt(1), BigInt(t));
}

void check_total_size(std::int64_t vertices) {
  if (vertices > 2'000'000)
    throw std::runtime_error("construction too large: " + std::to_string(vertices) +
                             " vertices");
}

}  // namespace

TargetRational normalize_target(std::int64_t p, std::int64_t q) {
  if (p <= 0 || q <= 0 || p >= q)
    throw std::invalid_argument("target must satisfy 0 < p < q");
  const auto g = gcd64(p, q);
  return TargetRational{p / g, q / g};
}

TargetRational parse_target(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
    throw std::invalid_argument("expected a fraction of the form p/q: '" + text + "'");
  std::size_t p_end = 0;
  std::size_t q_end = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  try {
    p = std::stoll(text.substr(0, slash), &p_end);
    q = std::stoll(text.substr(slash + 1), &q_end);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected a fraction of the form p/q: '" + text + "'");
  }
  if (p_end != slash || q_end != text.size() - slash - 1)
    throw std::invalid_argument("expected a fraction of the form p/q: '" + text + "'");
  return normalize_target(p, q);
}

std::string family_name(Family family) {
  switch (family) {
    case Family::BipartiteNecklace: return "BipartiteNecklace";
    case Family::ThetaDensity: return "ThetaDensity";
    case Family::ThetaDualMultigraph: return "ThetaDualMultigraph";
    default: return "HNecklace";
  }
}

Strategy parse_strategy(const std::string& text) {
  if (text == "greedy") return Strategy::Greedy;
  if (text == "uniform") return Strategy::Uniform;
  throw std::invalid_argument("unknown strategy '" + text + "' (greedy|uniform)");
}

nlohmann::json to_json(const Recipe& recipe) {
  return nlohmann::json{
      {"family", family_name(recipe.family)},
      {"p", recipe.p},
      {"q", recipe.q},
      {"params", recipe.params},
      {"claim",
       {{"kind", recipe.claim_kind == ClaimKind::Density ? "density" : "dependence"},
        {"value", to_fraction_string(recipe.claim_value)},
        {"theorem", recipe.theorem}}}};
}

std::vector<std::int64_t> decompose(const DecompositionConstraint& constraint,
                                    Strategy strategy) {
  if (constraint.target <= 0)
    throw std::invalid_argument("decomposition target must be positive");
  if (constraint.lower_bound < 1)
    throw std::invalid_argument("decomposition lower bound must be >= 1");

  const TermShape shape = constraint.term_shape;
  std::vector<std::int64_t> terms;

  if (strategy == Strategy::Uniform) {
    // For target a/b in lowest terms: a(a+b) copies of 1/((a+b)b), or 2a
    // copies of 2/((4b-2)+2). Both sums telescope to a/b exactly.
    const std::int64_t a = to_int64(numerator(constraint.target), "uniform decomposition");
    const std::int64_t b = to_int64(denominator(constraint.target), "uniform decomposition");
    std::int64_t t = 0;
    std::int64_t count = 0;
    if (shape == TermShape::Reciprocal) {
      t = (a + b) * b;
      count = a * (a + b);
    } else {
      t = 4 * b - 2;
      count = 2 * a;
    }
    if (t < constraint.lower_bound)
      throw std::invalid_argument("uniform decomposition violates the lower bound");
    terms.assign(static_cast<std::size_t>(count), t);
  } else {
    BigRat rem = constraint.target;
    while (rem > 0) {
      const BigInt a = numerator(rem);
      const BigInt b = denominator(rem);
      // Largest admissible term = smallest t at or above both the lower bound
      // and the value that keeps the term <= rem.
      BigInt need = shape == TermShape::Shifted ? ceil_div_big(2 * b, a) - 2
                                                : ceil_div_big(b, a);
      if (need < constraint.lower_bound) need = constraint.lower_bound;
      const std::int64_t t = to_int64(need, "greedy decomposition");
      terms.push_back(t);
      rem -= term_value(shape, t);
      if (terms.size() > 100000)
        throw std::runtime_error("greedy decomposition failed to converge");
    }
  }

  if (constraint.term_count_parity) {
    const bool want_even = *constraint.term_count_parity == Parity::Even;
    if ((terms.size() % 2 == 0) != want_even) {
      // Splitting 1/t into 1/2t + 1/2t (or the shifted analogue) preserves the
      // sum and the lower bound while flipping the term-count parity.
      const auto it = std::min_element(terms.begin(), terms.end());
      const std::int64_t t = *it;
      if (t > std::numeric_limits<std::int64_t>::max() / 2 - 2)
        throw std::overflow_error("parity split overflows");
      const std::int64_t doubled = shape == TermShape::Shifted ? 2 * t + 2 : 2 * t;
      terms.erase(it);
      terms.push_back(doubled);
      terms.push_back(doubled);
    }
  }

  BigRat sum = 0;
  for (const auto t : terms) {
    if (t < constraint.lower_bound)
      throw std::logic_error("decomposition term below the lower bound");
    sum += term_value(shape, t);
  }
  if (sum != constraint.target)
    throw std::logic_error("decomposition sum does not match the target");
  return terms;
}

Multigraph make_complete_bipartite(int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("K_{r,s} needs r, s >= 1");
  Multigraph g(r + s);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) g.add_edge(i, r + j, 1);
  return g;
}

namespace {

// Shared frame for the two necklace assemblers: hub i is vertex i, block i
// runs between hubs i and (i+1) mod n, internal vertices are appended after
// the hubs.
struct NecklaceFrame {
  int block_count = 0;
  int next_vertex = 0;

  int hub(int i) const { return i % block_count; }
};

}  // namespace

Construction assemble_bipartite_necklace(const std::vector<std::int64_t>& t_list) {
  if (t_list.empty())
    throw std::invalid_argument("bipartite necklace needs at least one K_{r,s} block");
  for (const auto t : t_list)
    if (t < 1) throw std::invalid_argument("block parameter t must be >= 1");

  const int n = static_cast<int>(t_list.size()) + 1;
  std::int64_t total = n;
  std::int64_t total_edges = 1;
  for (const auto t : t_list) {
    total += 4 * t - 3;
    total_edges += 2 * t * (2 * t - 1);
    if (total_edges > 5'000'000)
      throw std::runtime_error("bipartite necklace would exceed 5000000 edges");
  }
  check_total_size(total);

  Multigraph g(static_cast<int>(total));
  std::vector<BlockLayout> blocks;
  blocks.reserve(static_cast<std::size_t>(n));

  BlockLayout head;
  head.u = 0;
  head.v = 1 % n;
  head.key_edge = 0;
  head.edges = {0};
  g.add_edge(head.u, head.v, 1, "key:0");
  blocks.push_back(std::move(head));

  int next_vertex = n;
  for (std::size_t k = 0; k < t_list.size(); ++k) {
    const std::int64_t t = t_list[k];
    const int block = static_cast<int>(k) + 1;
    BlockLayout layout;
    layout.u = block;
    layout.v = (block + 1) % n;

    // X side: the key vertex u plus 2t-1 internal vertices; Y side: the key
    // vertex v plus 2t-2 internal vertices (so the block is K_{2t, 2t-1}).
    std::vector<int> xs = {layout.u};
    std::vector<int> ys = {layout.v};
    for (std::int64_t i = 1; i < 2 * t; ++i) xs.push_back(next_vertex++);
    for (std::int64_t i = 1; i < 2 * t - 1; ++i) ys.push_back(next_vertex++);
    layout.internal.assign(xs.begin() + 1, xs.end());
    layout.internal_x = static_cast<int>(xs.size()) - 1;
    layout.internal.insert(layout.internal.end(), ys.begin() + 1, ys.end());

    layout.key_edge = g.edge_count();
    layout.edges.push_back(g.edge_count());
    g.add_edge(layout.u, layout.v, 1, "key:" + std::to_string(block));
    for (const int x : xs)
      for (const int y : ys) {
        if (x == layout.u && y == layout.v) continue;
        layout.edges.push_back(g.edge_count());
        g.add_edge(x, y, 1);
      }
    blocks.push_back(std::move(layout));
  }

  Construction result{std::move(g), Recipe{}, std::move(blocks)};
  result.recipe.family = Family::BipartiteNecklace;
  result.recipe.params = t_list;
  result.recipe.key_edge = result.blocks.front().key_edge;
  return result;
}

Construction assemble_h_necklace(const std::vector<std::int64_t>& r_list) {
  if (r_list.size() < 2)
    throw std::invalid_argument("H necklace needs at least two gadget blocks");
  for (const auto r : r_list)
    if (r < 1) throw std::invalid_argument("gadget parameter r must be >= 1");

  const int n = static_cast<int>(r_list.size()) + 1;
  std::int64_t total = n;
  for (const auto r : r_list) total += r;
  check_total_size(total);

  Multigraph g(static_cast<int>(total));
  std::vector<BlockLayout> blocks;
  blocks.reserve(static_cast<std::size_t>(n));

  BlockLayout head;
  head.u = 0;
  head.v = 1;
  head.key_edge = 0;
  head.edges = {0};
  g.add_edge(0, 1, 1, "key:0");
  blocks.push_back(std::move(head));

  int next_vertex = n;
  for (std::size_t k = 0; k < r_list.size(); ++k) {
    const int block = static_cast<int>(k) + 1;
    BlockLayout layout;
    layout.u = block;
    layout.v = (block + 1) % n;
    layout.key_edge = g.edge_count();
    layout.edges.push_back(g.edge_count());
    g.add_edge(layout.u, layout.v, 1, "key:" + std::to_string(block));
    for (std::int64_t i = 0; i < r_list[k]; ++i) {
      const int w = next_vertex++;
      layout.internal.push_back(w);
      layout.edges.push_back(g.edge_count());
      g.add_edge(layout.u, w, 1);
      layout.edges.push_back(g.edge_count());
      g.add_edge(w, layout.v, 1);
    }
    blocks.push_back(std::move(layout));
  }

  Construction result{std::move(g), Recipe{}, std::move(blocks)};
  result.recipe.family = Family::HNecklace;
  result.recipe.params = r_list;
  result.recipe.key_edge = result.blocks.front().key_edge;
  return result;
}

Construction assemble_theta(const std::vector<std::int64_t>& r_list) {
  if (r_list.size() < 2)
    throw std::invalid_argument("a theta graph needs at least 2 paths");
  std::int64_t total = 2;
  for (const auto r : r_list) {
    if (r < 1) throw std::invalid_argument("path length must be >= 1");
    total += r - 1;
  }
  check_total_size(total);

  Multigraph g(static_cast<int>(total));
  std::vector<BlockLayout> blocks;
  blocks.reserve(r_list.size());

  int next_vertex = 2;
  for (std::size_t k = 0; k < r_list.size(); ++k) {
    BlockLayout layout;
    layout.u = 0;
    layout.v = 1;
    layout.key_edge = g.edge_count();
    int prev = 0;
    for (std::int64_t i = 1; i < r_list[k]; ++i) {
      const int w = next_vertex++;
      layout.internal.push_back(w);
      layout.edges.push_back(g.edge_count());
      g.add_edge(prev, w, 1, i == 1 && k == 0 ? "key:0" : "");
      prev = w;
    }
    layout.edges.push_back(g.edge_count());
    g.add_edge(prev, 1, 1, r_list[k] == 1 && k == 0 ? "key:0" : "");
    blocks.push_back(std::move(layout));
  }

  Construction result{std::move(g), Recipe{}, std::move(blocks)};
  result.recipe.family = Family::ThetaDensity;
  result.recipe.params = r_list;
  result.recipe.key_edge = result.blocks.front().key_edge;
  return result;
}

Construction assemble_theta_dual(const std::vector<std::int64_t>& r_list) {
  const int n = static_cast<int>(r_list.size());
  if (n < 2) throw std::invalid_argument("a theta dual needs at least 2 bundles");

  Multigraph g(n);
  std::vector<BlockLayout> blocks;
  blocks.reserve(r_list.size());
  for (std::size_t k = 0; k < r_list.size(); ++k) {
    if (r_list[k] < 1) throw std::invalid_argument("bundle size must be >= 1");
    BlockLayout layout;
    layout.u = static_cast<int>((k + n - 1) % n);
    layout.v = static_cast<int>(k);
    layout.key_edge = g.edge_count();
    layout.edges = {g.edge_count()};
    g.add_edge(layout.u, layout.v, r_list[k], k == 0 ? "key:0" : "");
    blocks.push_back(std::move(layout));
  }

  Construction result{std::move(g), Recipe{}, std::move(blocks)};
  result.recipe.family = Family::ThetaDualMultigraph;
  result.recipe.params = r_list;
  result.recipe.key_edge = result.blocks.front().key_edge;
  return result;
}

namespace {

void fill_claim(Construction& c, const TargetRational& target, ClaimKind kind,
                const char* theorem) {
  c.recipe.p = target.p;
  c.recipe.q = target.q;
  c.recipe.claim_kind = kind;
  c.recipe.claim_value = make_rational(BigInt(target.p), BigInt(target.q));
  c.recipe.theorem = theorem;
}

}  // namespace

Construction build_bipartite_necklace(const TargetRational& target, Strategy strategy) {
  const auto t = normalize_target(target.p, target.q);
  DecompositionConstraint c;
  c.target = make_rational(BigInt(t.p), BigInt(t.q - t.p));
  c.term_shape = TermShape::Reciprocal;
  c.lower_bound = ceil_div64(t.q, t.p);
  // The K_{1,1} block joins the t-blocks, so an odd term count gives the even
  // total block count that keeps the necklace bipartite.
  c.term_count_parity = Parity::Odd;
  const auto t_list = decompose(c, strategy);

  Construction result = assemble_bipartite_necklace(t_list);
  fill_claim(result, t, ClaimKind::Dependence, "2.5");
  return result;
}

Construction build_theta(const TargetRational& target, Strategy strategy) {
  const auto t = normalize_target(target.p, target.q);
  DecompositionConstraint c;
  c.target = make_rational(BigInt(t.q - t.p), BigInt(t.p));
  c.term_shape = TermShape::Reciprocal;
  c.lower_bound = 1;
  std::vector<std::int64_t> r_list = {1};
  const auto rest = decompose(c, strategy);
  r_list.insert(r_list.end(), rest.begin(), rest.end());

  Construction result = assemble_theta(r_list);
  fill_claim(result, t, ClaimKind::Density, "3.1");
  return result;
}

Construction build_theta_dual(const TargetRational& target, Strategy strategy) {
  const auto t = normalize_target(target.p, target.q);
  DecompositionConstraint c;
  c.target = make_rational(BigInt(t.p), BigInt(t.q - t.p));
  c.term_shape = TermShape::Reciprocal;
  c.lower_bound = 1;
  std::vector<std::int64_t> r_list = {1};
  const auto rest = decompose(c, strategy);
  r_list.insert(r_list.end(), rest.begin(), rest.end());

  Construction result = assemble_theta_dual(r_list);
  fill_claim(result, t, ClaimKind::Dependence, "3.2");
  return result;
}

Construction build_h_necklace(const TargetRational& target, Strategy strategy) {
  const auto t = normalize_target(target.p, target.q);
  if (2 * t.p <= t.q)
    throw std::domain_error(
        "dependence " + std::to_string(t.p) + "/" + std::to_string(t.q) +
        " is out of range for the simple-planar necklace: no simple planar graph has "
        "dependence <= 1/3, and the range (1/3, 1/2] is an open problem; this "
        "construction covers 1/2 < p/q < 1 only");

  DecompositionConstraint c;
  c.target = make_rational(BigInt(t.p), BigInt(t.q - t.p));
  c.term_shape = TermShape::Shifted;
  // Strictly above (4q-6p)/(2p-q): at equality the key edge ties with the
  // block's non-key edges and the dependence stops being uniquely attained.
  c.lower_bound = std::max<std::int64_t>(
      1, floor_div64(4 * t.q - 6 * t.p, 2 * t.p - t.q) + 1);
  const auto r_list = decompose(c, strategy);

  Construction result = assemble_h_necklace(r_list);
  fill_claim(result, t, ClaimKind::Dependence, "3.6");
  return result;
}

std::vector<PlanarSearchHit> search_planar_dep(int max_vertices, std::int64_t max_edges,
                                               const BigRat& lo, const BigRat& hi,
                                               int trials, std::uint64_t seed) {
  if (max_vertices < 4) throw std::invalid_argument("search needs max vertices >= 4");
  if (max_edges < 6) throw std::invalid_argument("search needs max edges >= 6");
  if (!(lo < hi)) throw std::invalid_argument("search interval is empty");

  std::mt19937_64 rng(seed);
  std::vector<PlanarSearchHit> hits;
  std::set<std::string> seen;

  for (int trial = 0; trial < trials; ++trial) {
    // Keep even the spanning tree inside the edge budget.
    const int v_cap = static_cast<int>(
        std::min<std::int64_t>(max_vertices, max_edges + 1));
    if (v_cap < 4) break;
    std::uniform_int_distribution<int> vertex_dist(4, v_cap);
    const int n_target = vertex_dist(rng);

    // Grow a stacked triangulation: repeatedly drop a new vertex into a
    // random face. Always simple, planar, and 3-connected.
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}};
    std::vector<std::pair<int, int>> edge_list = {{0, 1}, {0, 2}, {1, 2}};
    int n = 3;
    while (n < n_target) {
      std::uniform_int_distribution<std::size_t> face_dist(0, faces.size() - 1);
      const std::size_t idx = face_dist(rng);
      const auto face = faces[idx];
      const int w = n++;
      for (const int a : face) edge_list.push_back({a, w});
      faces[idx] = {face[0], face[1], w};
      faces.push_back({face[0], face[2], w});
      faces.push_back({face[1], face[2], w});
    }

    // Thin it out: random deletions that keep the graph connected.
    auto connected_without = [&](std::size_t skip) {
      std::vector<int> parent(n);
      for (int i = 0; i < n; ++i) parent[i] = i;
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      int components = n;
      for (std::size_t i = 0; i < edge_list.size(); ++i) {
        if (i == skip) continue;
        const int a = find(edge_list[i].first);
        const int b = find(edge_list[i].second);
        if (a != b) {
          parent[a] = b;
          --components;
        }
      }
      return components == 1;
    };

    std::uniform_int_distribution<std::size_t> extra_dist(0, edge_list.size());
    std::size_t attempts = extra_dist(rng);
    std::size_t guard = 20 * edge_list.size() + 100;
    while ((static_cast<std::int64_t>(edge_list.size()) > max_edges || attempts > 0) &&
           guard-- > 0) {
      if (attempts > 0) --attempts;
      if (edge_list.size() <= 3) break;
      std::uniform_int_distribution<std::size_t> pick(0, edge_list.size() - 1);
      const std::size_t victim = pick(rng);
      if (!connected_without(victim)) continue;
      edge_list[victim] = edge_list.back();
      edge_list.pop_back();
    }
    if (static_cast<std::int64_t>(edge_list.size()) > max_edges) continue;

    Multigraph g(n);
    for (const auto& [a, b] : edge_list) g.add_edge(a, b, 1);
    if (!is_connected(g)) continue;

    const auto report = density_report(g);
    if (lo < report.dep && report.dep <= hi) {
      const std::string fingerprint = serialize_graph(g);
      if (seen.insert(fingerprint).second) {
        hits.push_back(PlanarSearchHit{std::move(g), report.dep});
        if (hits.size() >= 64) break;
      }
    }
  }
  return hits;
}

}  // namespace treedep
