#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treedep/constructions.hpp"
#include "treedep/kirchhoff.hpp"
#include "treedep/multigraph.hpp"
#include "treedep/rational.hpp"
#include "treedep/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

void print_report_text(const treedep::DensityReport& report) {
  std::cout << "tau " << report.tau.str() << "\n";
  for (const auto& e : report.per_edge)
    std::cout << "edge " << e.edge << "\t" << e.u << "-" << e.v << "\tx" << e.multiplicity
              << "\ttau_e " << e.tau_e.str() << "\tdensity "
              << treedep::to_fraction_string(e.density) << "\n";
  std::cout << "dep " << treedep::to_fraction_string(report.dep) << "\n";
  std::cout << "argmax";
  for (const auto index : report.argmax_edges) std::cout << " " << index;
  std::cout << "\n";
}

int run_analyze(const std::string& path, bool as_json) {
  const auto g = treedep::read_graph_file(path);
  const auto report = treedep::density_report(g);
  if (as_json)
    std::cout << treedep::to_json(report).dump(2) << "\n";
  else
    print_report_text(report);
  return kExitOk;
}

treedep::Construction build_family(const std::string& family,
                                   const treedep::TargetRational& target,
                                   treedep::Strategy strategy) {
  if (family == "bipartite") return treedep::build_bipartite_necklace(target, strategy);
  if (family == "theta") return treedep::build_theta(target, strategy);
  if (family == "theta-dual") return treedep::build_theta_dual(target, strategy);
  if (family == "planar") return treedep::build_h_necklace(target, strategy);
  throw std::invalid_argument("unknown family '" + family +
                              "' (expected bipartite, theta, theta-dual, or planar)");
}

int run_construct(const std::string& family, const std::string& fraction,
                  const std::string& strategy_text, const std::string& out_path) {
  const auto target = treedep::parse_target(fraction);
  const auto strategy = treedep::parse_strategy(strategy_text);
  const auto c = build_family(family, target, strategy);

  const auto recipe_json = treedep::to_json(c.recipe);
  const auto graph_text = treedep::serialize_graph(c.graph);
  if (out_path.empty()) {
    std::cout << graph_text;
    std::cout << recipe_json.dump(2) << "\n";
  } else {
    std::ofstream graph_out(out_path);
    if (!graph_out) throw std::runtime_error("cannot write " + out_path);
    graph_out << graph_text;
    const std::string recipe_path = out_path + ".recipe.json";
    std::ofstream recipe_out(recipe_path);
    if (!recipe_out) throw std::runtime_error("cannot write " + recipe_path);
    recipe_out << recipe_json.dump(2) << "\n";
  }

  const auto check = treedep::verify_construction_claim(c);
  const char* kind =
      c.recipe.claim_kind == treedep::ClaimKind::Dependence ? "dependence" : "density";
  std::ostringstream summary;
  summary << family << " " << target.p << "/" << target.q << ": " << kind << " "
          << treedep::to_fraction_string(c.recipe.claim_value) << " ("
          << c.graph.vertex_count() << " vertices, " << c.graph.edge_count()
          << " edges, checked by " << check.method << ")";
  if (check.pass) {
    std::cout << "PASS " << summary.str() << "\n";
    return kExitOk;
  }
  std::cout << "FAIL " << summary.str() << ": " << check.detail << "\n";
  return kExitFailed;
}

int run_verify(const std::string& suite, std::uint64_t seed, std::size_t count,
               const treedep::OracleBudget& budget) {
  std::vector<treedep::PropertyOutcome> outcomes;
  if (suite == "oracle")
    outcomes = treedep::run_oracle_suite(seed, count, budget);
  else if (suite == "foster")
    outcomes = treedep::run_foster_suite(seed, count);
  else if (suite == "dual")
    outcomes = treedep::run_dual_suite(10);
  else if (suite == "bound")
    outcomes = treedep::run_bound_suite(seed);
  else if (suite == "forms")
    outcomes = treedep::run_forms_suite();
  else
    throw std::invalid_argument("unknown suite '" + suite +
                                "' (expected foster, dual, bound, forms, or oracle)");

  std::cout << treedep::summarize_tsv(outcomes);
  bool failed = false;
  for (const auto& outcome : outcomes) {
    if (outcome.pass) continue;
    failed = true;
    std::cout << outcome.witness << "\n";
  }
  return failed ? kExitFailed : kExitOk;
}

int run_search(int max_vertices, std::int64_t max_edges, const std::string& lo_text,
               const std::string& hi_text, int trials, std::uint64_t seed) {
  const treedep::BigRat lo = treedep::parse_fraction(lo_text);
  const treedep::BigRat hi = treedep::parse_fraction(hi_text);
  if (!(lo < hi)) throw std::invalid_argument("search interval needs lo < hi");
  const auto hits = treedep::search_planar_dep(max_vertices, max_edges, lo, hi, trials, seed);
  std::cout << "hits " << hits.size() << "\n";
  for (std::size_t i = 0; i < hits.size(); ++i) {
    std::cout << "# hit " << i << " dep " << treedep::to_fraction_string(hits[i].dep)
              << "\n";
    std::cout << treedep::serialize_graph(hits[i].graph) << "\n";
  }
  return kExitOk;
}

int run_resistance(const std::string& path, int u, int v) {
  const auto g = treedep::read_graph_file(path);
  if (u == v || u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
    throw std::invalid_argument("resistance needs two distinct vertices of the graph");
  std::cout << treedep::to_fraction_string(treedep::resistance(g, u, v)) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"treedep: exact spanning-tree edge densities, dependence, and constructions"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "exact density report for a graph file");
  std::string analyze_path;
  bool analyze_json = false;
  analyze->add_option("graph-file", analyze_path, "multigraph file to analyze")->required();
  analyze->add_flag("--json", analyze_json, "emit the report as JSON");

  auto* construct = app.add_subcommand(
      "construct", "compile a fraction p/q into a graph family and re-verify the claim");
  std::string construct_family;
  std::string construct_fraction;
  std::string construct_strategy = "greedy";
  std::string construct_out;
  construct
      ->add_option("family", construct_family,
                   "one of: bipartite, theta, theta-dual, planar")
      ->required();
  construct->add_option("fraction", construct_fraction, "target written as p/q")->required();
  construct->add_option("--strategy", construct_strategy, "greedy (default) or uniform");
  construct->add_option("--out", construct_out,
                        "write the graph to FILE and the recipe to FILE.recipe.json");

  auto* verify = app.add_subcommand("verify", "run a property suite and print a TSV summary");
  std::string verify_suite;
  std::uint64_t verify_seed = 1;
  std::size_t verify_count = 200;
  treedep::OracleBudget verify_budget;
  verify->add_option("suite", verify_suite, "one of: foster, dual, bound, forms, oracle")
      ->required();
  verify->add_option("--seed", verify_seed, "seed for randomized instances");
  verify->add_option("--count", verify_count, "number of random corpus graphs");
  verify->add_option("--budget-vertices", verify_budget.max_vertices,
                     "oracle vertex ceiling");
  verify->add_option("--budget-units", verify_budget.max_edge_units,
                     "oracle edge-unit ceiling");
  verify->add_option("--budget-steps", verify_budget.max_trees,
                     "oracle enumeration step ceiling");

  auto* search = app.add_subcommand("search-planar",
                                    "random hunt for simple planar graphs with dep in (lo, hi]");
  int search_max_v = 10;
  std::int64_t search_max_e = 20;
  std::string search_lo = "1/3";
  std::string search_hi = "1/2";
  int search_trials = 200;
  std::uint64_t search_seed = 1;
  search->add_option("--max-v", search_max_v, "largest vertex count")->required();
  search->add_option("--max-e", search_max_e, "largest edge count")->required();
  search->add_option("--lo", search_lo, "open lower bound, as p/q")->required();
  search->add_option("--hi", search_hi, "closed upper bound, as p/q")->required();
  search->add_option("--trials", search_trials, "number of random growth trials");
  search->add_option("--seed", search_seed, "random seed");

  auto* resist = app.add_subcommand("resistance",
                                    "effective resistance between two vertices");
  std::string resist_path;
  int resist_u = 0;
  int resist_v = 0;
  resist->add_option("graph-file", resist_path, "multigraph file")->required();
  resist->add_option("u", resist_u, "first vertex")->required();
  resist->add_option("v", resist_v, "second vertex")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(analyze_path, analyze_json);
    if (*construct)
      return run_construct(construct_family, construct_fraction, construct_strategy,
                           construct_out);
    if (*verify) return run_verify(verify_suite, verify_seed, verify_count, verify_budget);
    if (*search)
      return run_search(search_max_v, search_max_e, search_lo, search_hi, search_trials,
                        search_seed);
    if (*resist) return run_resistance(resist_path, resist_u, resist_v);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
