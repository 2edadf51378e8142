// clusterwalk: compute and validate transformation plans between two labeled
// clusterings of the same data set.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "clusterwalk/cdg.hpp"
#include "clusterwalk/decompose.hpp"
#include "clusterwalk/generate.hpp"
#include "clusterwalk/io.hpp"
#include "clusterwalk/model.hpp"
#include "clusterwalk/oracle.hpp"
#include "clusterwalk/planner.hpp"

namespace cw = clusterwalk;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kUsageError = 2;

cw::DecomposeStrategy parse_strategy(const std::string& name) {
  if (name == "greedy-paths") return cw::DecomposeStrategy::GreedyPathsFirst;
  if (name == "greedy-cycles") return cw::DecomposeStrategy::GreedyCyclesFirst;
  if (name == "max-cycle-edges") return cw::DecomposeStrategy::MaxCycleEdges;
  throw cw::ValidationError("unknown strategy '" + name + "'");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    cw::save_text(out_path, text);
}

int run_validate(const std::string& a_path, const std::string& b_path,
                 const std::string& plan_path, const std::string& bounds_path) {
  cw::Clustering a = cw::load_clustering(a_path);
  cw::Clustering b = cw::load_clustering(b_path);
  cw::TransformationPlan plan{a, b, cw::load_plan(plan_path), std::nullopt};
  if (!bounds_path.empty()) plan.bounds = cw::load_bounds(bounds_path);
  std::vector<cw::Clustering> trace;
  try {
    trace = cw::apply_plan(a, plan, plan.bounds.has_value());
  } catch (const cw::BoundViolationError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const cw::Error& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kValidationFailure;
  }
  if (!(trace.back() == b)) {
    // Report the first item that lands in the wrong cluster.
    for (const std::string& item : trace.back().items()) {
      int got = trace.back().cluster_of(item);
      int want = b.cluster_of(item);
      if (got != want) {
        std::cerr << "invalid: replay leaves item '" << item << "' in cluster "
                  << got << ", target wants " << want << "\n";
        return kValidationFailure;
      }
    }
    std::cerr << "invalid: replay does not reach the target\n";
    return kValidationFailure;
  }
  std::cout << "ok: " << plan.moves.size() << " moves replay to the target\n";
  return kOk;
}

int dispatch(int argc, char** argv) {
  CLI::App app{
      "Transformation plans between two labeled clusterings: difference "
      "graphs, distance bounds, and validated move sequences"};
  app.require_subcommand(1);

  std::string a_path, b_path, plan_path, bounds_path, dot_path, out_path;
  std::string strategy = "greedy-paths";
  bool exact = false, force = false;
  int gen_n = 10, gen_k = 3;
  std::uint64_t gen_seed = 1;
  int diameter_n = 0;
  std::string out_a, out_b;

  auto* cdg = app.add_subcommand("cdg", "Clustering-difference graph of A -> B");
  cdg->add_option("a", a_path, "source clustering JSON")->required();
  cdg->add_option("b", b_path, "target clustering JSON")->required();
  cdg->add_option("--dot", dot_path, "also write a DOT rendering here");
  cdg->add_option("-o,--output", out_path, "write JSON here instead of stdout");

  auto* dec = app.add_subcommand("decompose", "Path-cycle decomposition of the CDG");
  dec->add_option("a", a_path)->required();
  dec->add_option("b", b_path)->required();
  dec->add_option("--strategy", strategy,
                  "greedy-paths | greedy-cycles | max-cycle-edges");
  dec->add_option("-o,--output", out_path);

  auto* bnd = app.add_subcommand("bound", "Transformation-distance bounds");
  bnd->add_option("a", a_path)->required();
  bnd->add_option("b", b_path)->required();
  bnd->add_option("-o,--output", out_path);

  auto* pln = app.add_subcommand("plan", "Construct a transformation plan");
  pln->add_option("a", a_path)->required();
  pln->add_option("b", b_path)->required();
  pln->add_option("--bounded", bounds_path, "respect these size bounds");
  pln->add_option("--strategy", strategy);
  pln->add_option("-o,--output", out_path, "write the plan here");

  auto* val = app.add_subcommand("validate", "Replay a plan and check it");
  val->add_option("a", a_path)->required();
  val->add_option("b", b_path)->required();
  val->add_option("plan", plan_path)->required();
  val->add_option("--bounds", bounds_path, "enforce size bounds along the way");

  auto* orc = app.add_subcommand("oracle", "Exact distance by exhaustive search");
  orc->add_option("a", a_path)->required();
  orc->add_option("b", b_path)->required();
  orc->add_option("--bounds", bounds_path);
  orc->add_flag("--force", force, "lift the n <= 8, k <= 5 guard");
  orc->add_option("-o,--output", out_path);

  auto* dst = app.add_subcommand("distance", "Exact distance or bracket");
  dst->add_option("a", a_path)->required();
  dst->add_option("b", b_path)->required();
  dst->add_flag("--exact", exact, "require the exhaustive answer");
  dst->add_option("-o,--output", out_path);

  auto* dia = app.add_subcommand("diameter-bound",
                                 "Circuit-diameter bounds for size bounds");
  dia->add_option("bounds", bounds_path)->required();
  dia->add_option("--n", diameter_n, "number of items")->required();
  dia->add_option("-o,--output", out_path);

  auto* gen = app.add_subcommand("gen", "Random instance pair for testing");
  gen->add_option("--n", gen_n, "items")->required();
  gen->add_option("--k", gen_k, "clusters")->required();
  gen->add_option("--seed", gen_seed)->required();
  gen->add_option("--out-a", out_a, "write the first clustering here");
  gen->add_option("--out-b", out_b, "write the second clustering here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  if (cdg->parsed()) {
    cw::Clustering a = cw::load_clustering(a_path);
    cw::Clustering b = cw::load_clustering(b_path);
    cw::ClusteringDifferenceGraph g = cw::build_cdg(a, b);
    emit(cw::write_cdg(g), out_path);
    if (!dot_path.empty()) cw::save_text(dot_path, cw::to_dot(g));
    return kOk;
  }
  if (dec->parsed()) {
    cw::Clustering a = cw::load_clustering(a_path);
    cw::Clustering b = cw::load_clustering(b_path);
    auto d = cw::path_cycle_decompose(cw::build_cdg(a, b),
                                      parse_strategy(strategy));
    emit(cw::write_decomposition(d), out_path);
    return kOk;
  }
  if (bnd->parsed()) {
    cw::Clustering a = cw::load_clustering(a_path);
    cw::Clustering b = cw::load_clustering(b_path);
    emit(cw::write_bound_report(cw::bounds(a, b)), out_path);
    return kOk;
  }
  if (pln->parsed()) {
    cw::Clustering a = cw::load_clustering(a_path);
    cw::Clustering b = cw::load_clustering(b_path);
    cw::PlannerOptions options;
    options.strategy = parse_strategy(strategy);
    std::vector<cw::Move> moves;
    if (bounds_path.empty()) {
      moves = cw::plan(a, b, options).moves;
    } else {
      cw::BoundedPlanResult r =
          cw::plan_bounded(a, b, cw::load_bounds(bounds_path), options);
      for (const std::string& w : r.warnings)
        std::cerr << "warning: " << w << "\n";
      moves = std::move(r.plan.moves);
    }
    emit(cw::write_plan(moves), out_path);
    return kOk;
  }
  if (val->parsed()) return run_validate(a_path, b_path, plan_path, bounds_path);
  if (orc->parsed()) {
    cw::Clustering a = cw::load_clustering(a_path);
    cw::Clustering b = cw::load_clustering(b_path);
    std::optional<cw::SizeBounds> bounds;
    if (!bounds_path.empty()) bounds = cw::load_bounds(bounds_path);
    cw::ExactDistance d = cw::exact_distance(a, b, bounds, force);
    json out{{"distance", d.distance},
             {"moves", json::parse(cw::write_plan(d.plan.moves)).at("moves")}};
    emit(out.dump(2) + "\n", out_path);
    return kOk;
  }
  if (dst->parsed()) {
    cw::Clustering a = cw::load_clustering(a_path);
    cw::Clustering b = cw::load_clustering(b_path);
    bool small = a.size() <= 8 && a.k() <= 5;
    json out;
    if (exact || small) {
      out["exact"] = cw::exact_distance(a, b, std::nullopt, exact).distance;
    } else {
      cw::BoundReport r = cw::bounds(a, b);
      std::size_t length = cw::plan(a, b).moves.size();
      int lower = std::max(r.lower, cw::build_cdg(a, b).empty() ? 0 : 1);
      out["lower"] = lower;
      out["upper"] = static_cast<int>(length);
    }
    emit(out.dump(2) + "\n", out_path);
    return kOk;
  }
  if (dia->parsed()) {
    cw::SizeBounds b = cw::load_bounds(bounds_path);
    emit(cw::write_diameter_report(cw::diameter_bounds(b, diameter_n)),
         out_path);
    return kOk;
  }
  if (gen->parsed()) {
    auto [a, b] = cw::random_clustering_pair(gen_n, gen_k, gen_seed);
    if (out_a.empty() && out_b.empty()) {
      json out{{"a", json::parse(cw::write_clustering(a))},
               {"b", json::parse(cw::write_clustering(b))}};
      std::cout << out.dump(2) << "\n";
    } else {
      if (!out_a.empty()) cw::save_text(out_a, cw::write_clustering(a));
      if (!out_b.empty()) cw::save_text(out_b, cw::write_clustering(b));
    }
    return kOk;
  }
  return kUsageError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const CLI::ParseError&) {
    return kUsageError;
  } catch (const cw::BoundViolationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const cw::UnreachableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const cw::InfeasibleEndpointsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const cw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}
