#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <stdexcept>
#include <vector>

#include "treedep/closed_forms.hpp"
#include "treedep/constructions.hpp"
#include "treedep/kirchhoff.hpp"
#include "treedep/multigraph.hpp"

using namespace treedep;

namespace {

std::vector<std::int64_t> run_decompose(const BigRat& target, TermShape shape,
                                        std::int64_t bound, Strategy strategy,
                                        std::optional<Parity> parity = std::nullopt) {
  DecompositionConstraint c;
  c.target = target;
  c.term_shape = shape;
  c.lower_bound = bound;
  c.term_count_parity = parity;
  return decompose(c, strategy);
}

}  // namespace

TEST_CASE("target parsing and normalization") {
  CHECK(parse_target("2/3").p == 2);
  CHECK(parse_target("2/3").q == 3);
  CHECK(parse_target("4/6").p == 2);
  CHECK(parse_target("4/6").q == 3);
  CHECK(normalize_target(10, 15).p == 2);

  CHECK_THROWS_AS(parse_target("3/2"), std::invalid_argument);   // >= 1
  CHECK_THROWS_AS(parse_target("0/5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_target("-1/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_target("2/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_target("/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_target("2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_target("2/3x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_target("a/b"), std::invalid_argument);

  CHECK(parse_strategy("greedy") == Strategy::Greedy);
  CHECK(parse_strategy("uniform") == Strategy::Uniform);
  CHECK_THROWS_AS(parse_strategy("fast"), std::invalid_argument);
}

TEST_CASE("greedy reciprocal decompositions") {
  CHECK(run_decompose(BigRat(1), TermShape::Reciprocal, 2, Strategy::Greedy) ==
        std::vector<std::int64_t>{2, 2});
  CHECK(run_decompose(BigRat(2) / 3, TermShape::Reciprocal, 3, Strategy::Greedy) ==
        std::vector<std::int64_t>{3, 3});
  CHECK(run_decompose(BigRat(2) / 3, TermShape::Reciprocal, 1, Strategy::Greedy) ==
        std::vector<std::int64_t>{2, 6});
  CHECK(run_decompose(BigRat(2), TermShape::Reciprocal, 2, Strategy::Greedy) ==
        std::vector<std::int64_t>{2, 2, 2, 2});
}

TEST_CASE("uniform reciprocal decomposition") {
  // a/b in lowest terms becomes a(a+b) copies of 1/((a+b)b).
  const auto terms = run_decompose(BigRat(2) / 3, TermShape::Reciprocal, 1,
                                   Strategy::Uniform);
  CHECK(terms == std::vector<std::int64_t>(10, 15));
  CHECK_THROWS_AS(run_decompose(BigRat(1) / 2, TermShape::Reciprocal, 7,
                                Strategy::Uniform),
                  std::invalid_argument);  // fixed term size 6 under the bound
}

TEST_CASE("shifted decompositions") {
  CHECK(run_decompose(BigRat(3) / 2, TermShape::Shifted, 2, Strategy::Greedy) ==
        std::vector<std::int64_t>{2, 2, 2});
  CHECK(run_decompose(BigRat(2), TermShape::Shifted, 1, Strategy::Greedy) ==
        std::vector<std::int64_t>{1, 1, 1});
  CHECK(run_decompose(BigRat(3) / 2, TermShape::Shifted, 1, Strategy::Uniform) ==
        std::vector<std::int64_t>(6, 6));  // 2a copies of 4b-2
}

TEST_CASE("parity restoration splits the smallest term") {
  const auto odd = run_decompose(BigRat(2) / 3, TermShape::Reciprocal, 3,
                                 Strategy::Greedy, Parity::Odd);
  CHECK(odd == std::vector<std::int64_t>{3, 6, 6});
  const auto even = run_decompose(BigRat(2) / 3, TermShape::Reciprocal, 3,
                                  Strategy::Greedy, Parity::Even);
  CHECK(even == std::vector<std::int64_t>{3, 3});
  // Shifted split: 2/(t+2) = 2 * 2/((2t+2)+2).
  const auto shifted = run_decompose(BigRat(1) / 2, TermShape::Shifted, 2,
                                     Strategy::Greedy, Parity::Even);
  CHECK(shifted == std::vector<std::int64_t>{6, 6});
}

TEST_CASE("decomposition sums are exact") {
  for (const auto& [num, den] : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 3}, {7, 5}, {13, 4}, {5, 9}}) {
    const BigRat target = BigRat(num) / den;
    for (const auto strategy : {Strategy::Greedy, Strategy::Uniform}) {
      BigRat sum = 0;
      for (const auto t : run_decompose(target, TermShape::Reciprocal, 1, strategy))
        sum += BigRat(1) / t;
      CHECK(sum == target);
    }
  }
  CHECK_THROWS_AS(run_decompose(BigRat(0), TermShape::Reciprocal, 1, Strategy::Greedy),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_decompose(BigRat(1), TermShape::Reciprocal, 0, Strategy::Greedy),
                  std::invalid_argument);
}

TEST_CASE("complete bipartite assembler") {
  const auto g = make_complete_bipartite(4, 3);
  CHECK(g.vertex_count() == 7);
  CHECK(g.edge_count() == 12);
  CHECK(is_simple(g));
  CHECK(bipartition(g).has_value());
  CHECK(tau(g) == 432);
  // Record layout: edge (x_i, y_j) sits at index i*s + j.
  CHECK(g.edges()[1 * 3 + 2].u == 1);
  CHECK(g.edges()[1 * 3 + 2].v == 4 + 2);
  CHECK_THROWS_AS(make_complete_bipartite(0, 3), std::invalid_argument);
}

TEST_CASE("bipartite necklace assembler layout") {
  const auto c = assemble_bipartite_necklace({2, 2});
  // Head K_{1,1} plus two K_{4,3} blocks on a 3-cycle of hubs.
  CHECK(c.graph.vertex_count() == 3 + 2 * 5);
  CHECK(c.blocks.size() == 3);
  CHECK(c.recipe.key_edge == c.blocks[0].key_edge);
  CHECK(c.graph.edges()[c.blocks[0].key_edge].label == "key:0");
  CHECK(c.graph.edges()[c.blocks[1].key_edge].label == "key:1");
  CHECK(c.blocks[1].u == 1);
  CHECK(c.blocks[1].v == 2);
  CHECK(c.blocks[2].v == 0);  // wraps back to hub 0
  CHECK(c.blocks[1].internal.size() == 5);
  CHECK(c.blocks[1].internal_x == 3);
  CHECK(c.blocks[1].edges.size() == 12);  // K_{4,3}
  CHECK(is_simple(c.graph));
  // An even hub cycle (odd term count plus the head) is what keeps the
  // necklace bipartite; two terms give an odd cycle.
  CHECK(!bipartition(c.graph).has_value());
  CHECK(bipartition(assemble_bipartite_necklace({2, 2, 2}).graph).has_value());

  // Degenerate two-block necklace: K_{1,1} glued to one K_{4,3} block.
  const auto two = assemble_bipartite_necklace({2});
  CHECK(two.graph.vertex_count() == 7);
  CHECK(tau(two.graph) == 648);  // 432 * (1 + 1/2)

  CHECK_THROWS_AS(assemble_bipartite_necklace({}), std::invalid_argument);
  CHECK_THROWS_AS(assemble_bipartite_necklace({0}), std::invalid_argument);
  // The edge budget rejects absurd block sizes before allocating.
  CHECK_THROWS_AS(assemble_bipartite_necklace({2000}), std::runtime_error);
}

TEST_CASE("H necklace assembler layout") {
  const auto c = assemble_h_necklace({2, 2, 2, 2});
  CHECK(c.graph.vertex_count() == 5 + 8);
  CHECK(c.blocks.size() == 5);
  CHECK(c.graph.edges()[c.blocks[0].key_edge].label == "key:0");
  CHECK(c.blocks[1].edges.size() == 5);  // key + 2 edges per internal vertex
  CHECK(is_simple(c.graph));
  CHECK(tau(c.graph) == 12288);
  CHECK_THROWS_AS(assemble_h_necklace({2}), std::invalid_argument);
  CHECK_THROWS_AS(assemble_h_necklace({2, 0}), std::invalid_argument);
}

TEST_CASE("theta assembler layout") {
  const auto c = assemble_theta({1, 2, 3});
  CHECK(c.graph.vertex_count() == 2 + 0 + 1 + 2);
  CHECK(c.blocks.size() == 3);
  CHECK(c.graph.edges()[c.recipe.key_edge].label == "key:0");
  CHECK(c.blocks[0].edges.size() == 1);
  CHECK(c.blocks[2].edges.size() == 3);
  CHECK(tau(c.graph) == 11);
  CHECK(tau_edge(c.graph, c.recipe.key_edge) == 6);
  CHECK_THROWS_AS(assemble_theta({3}), std::invalid_argument);
  CHECK_THROWS_AS(assemble_theta({1, 0}), std::invalid_argument);
}

TEST_CASE("theta dual assembler layout") {
  const auto c = assemble_theta_dual({1, 2, 3});
  CHECK(c.graph.vertex_count() == 3);
  CHECK(c.graph.edge_count() == 3);
  CHECK(c.graph.edge_units() == 6);
  CHECK(c.graph.edges()[c.recipe.key_edge].label == "key:0");
  CHECK(c.graph.edges()[1].multiplicity == 2);
  // Dual pair: same spanning tree count as the theta graph itself.
  CHECK(tau(c.graph) == theta_tau({1, 2, 3}));
  CHECK_THROWS_AS(assemble_theta_dual({5}), std::invalid_argument);
  CHECK_THROWS_AS(assemble_theta_dual({1, 0}), std::invalid_argument);
}

TEST_CASE("bipartite necklace builder hits its dependence") {
  const auto half = build_bipartite_necklace(normalize_target(1, 2));
  CHECK(half.recipe.params == std::vector<std::int64_t>{2, 4, 4});
  CHECK(half.recipe.claim_kind == ClaimKind::Dependence);
  CHECK(half.recipe.claim_value == BigRat(1) / 2);
  CHECK(bipartition(half.graph).has_value());

  const auto report = density_report(half.graph);
  CHECK(report.dep == BigRat(1) / 2);
  CHECK(report.argmax_edges == std::vector<std::size_t>{half.recipe.key_edge});

  const auto two_thirds = build_bipartite_necklace(normalize_target(2, 3));
  CHECK(two_thirds.recipe.params == std::vector<std::int64_t>{2, 2, 2, 4, 4});
  CHECK(bipartition(two_thirds.graph).has_value());
}

TEST_CASE("theta builder hits its density") {
  const auto c = build_theta(normalize_target(3, 5));
  CHECK(c.recipe.params == std::vector<std::int64_t>{1, 2, 6});
  CHECK(c.recipe.claim_kind == ClaimKind::Density);
  CHECK(density(c.graph, c.recipe.key_edge) == BigRat(3) / 5);

  const auto half = build_theta(normalize_target(1, 2));
  CHECK(half.recipe.params == std::vector<std::int64_t>{1, 1});
  CHECK(density(half.graph, half.recipe.key_edge) == BigRat(1) / 2);

  const auto high = build_theta(normalize_target(5, 6));
  CHECK(high.recipe.params == std::vector<std::int64_t>{1, 5});
  CHECK(density(high.graph, high.recipe.key_edge) == BigRat(5) / 6);
}

TEST_CASE("theta dual builder hits its dependence") {
  const auto c = build_theta_dual(normalize_target(2, 5));
  CHECK(c.recipe.params == std::vector<std::int64_t>{1, 2, 6});
  CHECK(c.recipe.claim_kind == ClaimKind::Dependence);
  const auto report = density_report(c.graph);
  CHECK(report.dep == BigRat(2) / 5);
  CHECK(report.per_edge[c.recipe.key_edge].density == BigRat(2) / 5);

  // Low targets below any simple-planar dependence are exactly the point.
  const auto tiny = build_theta_dual(normalize_target(1, 7));
  CHECK(density_report(tiny.graph).dep == BigRat(1) / 7);
}

TEST_CASE("H necklace builder hits its dependence and stays simple") {
  const auto greedy = build_h_necklace(normalize_target(2, 3));
  CHECK(greedy.recipe.params == std::vector<std::int64_t>{1, 1, 1});
  CHECK(is_simple(greedy.graph));
  const auto report = density_report(greedy.graph);
  CHECK(report.dep == BigRat(2) / 3);
  CHECK(report.argmax_edges == std::vector<std::size_t>{greedy.recipe.key_edge});

  const auto uniform = build_h_necklace(normalize_target(2, 3), Strategy::Uniform);
  CHECK(uniform.recipe.params == std::vector<std::int64_t>{2, 2, 2, 2});
  CHECK(density_report(uniform.graph).dep == BigRat(2) / 3);

  // The strict block-size bound keeps the key edge the unique maximum.
  const auto tight = build_h_necklace(normalize_target(3, 5));
  const auto tight_report = density_report(tight.graph);
  CHECK(tight_report.dep == BigRat(3) / 5);
  CHECK(tight_report.argmax_edges ==
        std::vector<std::size_t>{tight.recipe.key_edge});

  CHECK_THROWS_AS(build_h_necklace(normalize_target(1, 2)), std::domain_error);
  CHECK_THROWS_AS(build_h_necklace(normalize_target(1, 3)), std::domain_error);
  CHECK_THROWS_AS(build_h_necklace(normalize_target(2, 5)), std::domain_error);
}

TEST_CASE("recipe JSON wire format") {
  const auto c = build_bipartite_necklace(normalize_target(1, 2));
  const auto j = to_json(c.recipe);
  CHECK(j.at("family") == "BipartiteNecklace");
  CHECK(j.at("p") == 1);
  CHECK(j.at("q") == 2);
  CHECK(j.at("params") == nlohmann::json({2, 4, 4}));
  CHECK(j.at("claim").at("kind") == "dependence");
  CHECK(j.at("claim").at("value") == "1/2");
  CHECK(j.at("claim").at("theorem") == "2.5");

  CHECK(to_json(build_theta(normalize_target(3, 5)).recipe).at("claim").at("theorem") ==
        "3.1");
  CHECK(to_json(build_theta_dual(normalize_target(2, 5)).recipe)
            .at("claim")
            .at("theorem") == "3.2");
  CHECK(to_json(build_h_necklace(normalize_target(2, 3)).recipe)
            .at("claim")
            .at("theorem") == "3.6");
  CHECK(to_json(build_theta(normalize_target(3, 5)).recipe).at("claim").at("kind") ==
        "density");
}

TEST_CASE("planar search returns verified hits deterministically") {
  const BigRat lo = BigRat(1) / 3;
  const BigRat hi = BigRat(1) / 2;
  const auto hits = search_planar_dep(8, 14, lo, hi, 80, 7);
  REQUIRE(!hits.empty());
  for (const auto& hit : hits) {
    CHECK(is_simple(hit.graph));
    CHECK(is_connected(hit.graph));
    CHECK(hit.graph.edge_units() <=
          3 * static_cast<std::int64_t>(hit.graph.vertex_count()) - 6);
    CHECK(lo < hit.dep);
    CHECK(hit.dep <= hi);
    CHECK(density_report(hit.graph).dep == hit.dep);
  }

  const auto again = search_planar_dep(8, 14, lo, hi, 80, 7);
  REQUIRE(again.size() == hits.size());
  for (std::size_t i = 0; i < hits.size(); ++i)
    CHECK(serialize_graph(again[i].graph) == serialize_graph(hits[i].graph));

  CHECK_THROWS_AS(search_planar_dep(3, 14, lo, hi), std::invalid_argument);
  CHECK_THROWS_AS(search_planar_dep(8, 14, hi, hi), std::invalid_argument);
}
