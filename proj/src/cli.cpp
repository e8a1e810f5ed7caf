#include "sprad/cli.hpp"

#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sprad/error.hpp"
#include "sprad/formats.hpp"
#include "sprad/harness.hpp"
#include "sprad/report.hpp"

namespace sprad {

namespace {

struct CommonFlags {
  double gap = Tolerances{}.gap;
  double eq = Tolerances{}.eq;
  double necessity = Tolerances{}.necessity;
  bool json = false;

  Tolerances tolerances() const {
    for (double t : {gap, eq, necessity})
      if (!(t > 0.0)) throw Error(Errc::InvalidConfig, "tolerances must be positive");
    return {gap, eq, necessity};
  }
};

struct FuzzFlags {
  std::string model = "gnp";
  int n_min = 1;
  int n_max = 10;
  std::vector<double> densities;
  int degree = 3;
  std::vector<int> side_degrees;
  int trials = 100;
  std::uint64_t seed = 0;
  int threads = 1;
  bool allow_disconnected = false;
  bool no_shrink = false;
  bool timing = false;
  std::vector<std::string> properties;

  TrialConfig config(const Tolerances& tol) const {
    TrialConfig c;
    c.model = parse_model(model);
    c.n_min = n_min;
    c.n_max = n_max;
    if (!densities.empty()) c.densities = densities;
    c.degree = degree;
    if (!side_degrees.empty()) {
      if (side_degrees.size() != 2) throw Error(Errc::InvalidConfig, "--side-degrees takes two values");
      c.side_degrees = std::pair{side_degrees[0], side_degrees[1]};
    }
    c.trials = trials;
    c.seed = seed;
    c.tolerances = tol;
    c.connected = !allow_disconnected;
    c.shrink = !no_shrink;
    c.threads = threads;
    c.validate();
    return c;
  }
};

std::string read_input(const std::string& path) {
  if (path != "-") return read_file(path);
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--tolerance-gap", f.gap, "Equality tolerance on bound - exact, relative to max(1, bound)")
      ->capture_default_str();
  cmd->add_option("--tolerance-eq", f.eq, "Tolerance for comparing per-index expressions")->capture_default_str();
  cmd->add_option("--tolerance-necessity", f.necessity, "Spread allowed when equality holds")
      ->capture_default_str();
  cmd->add_flag("--json", f.json, "Emit JSON instead of dotted key lines");
}

void add_trial_flags(CLI::App* cmd, FuzzFlags& f) {
  cmd->add_option("--model", f.model,
                  "gnp | random-regular | bipartite-semiregular | digraph-gnp | nonneg-matrix | signed-matrix")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Master seed")->capture_default_str();
  cmd->add_option("--trials", f.trials, "Number of trials")->capture_default_str();
  cmd->add_option("--n-min", f.n_min, "Smallest order")->capture_default_str();
  cmd->add_option("--n-max", f.n_max, "Largest order")->capture_default_str();
  cmd->add_option("--density", f.densities, "Edge/arc/entry probability; repeat to cycle several");
  cmd->add_option("--degree", f.degree, "Degree for random-regular")->capture_default_str();
  cmd->add_option("--side-degrees", f.side_degrees, "Side degrees r s for bipartite-semiregular")
      ->expected(2);
  cmd->add_option("--threads", f.threads, "Worker threads")->capture_default_str();
  cmd->add_flag("--allow-disconnected", f.allow_disconnected,
                "Do not condition on connectivity / irreducibility");
  cmd->add_flag("--timing", f.timing, "Include wall time in the report");
}

nlohmann::json report_for(const std::string& path, const Tolerances& tol, bool require_nonnegative) {
  const std::string text = read_input(path);
  if (looks_like_matrix_market(text))
    return report::matrix_report(parse_matrix(text), {path, "matrix-market"}, tol, require_nonnegative);
  return report::graph_report(parse_graph(text), {path, "edge-list"}, tol);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral radius bounds for nonnegative matrices, graphs and digraphs", "sprad"};
  app.set_version_flag("--version", std::string(report::kVersion));
  app.require_subcommand(1);

  CommonFlags common;
  FuzzFlags fuzz;
  std::string path;
  bool require_nonnegative = false;

  auto* report_cmd = app.add_subcommand("report", "Exact radii and bounds for a graph, digraph or matrix file");
  report_cmd->add_option("input", path, "Edge-list or Matrix Market file ('-' for stdin)")->required();
  report_cmd->add_flag("--require-nonnegative", require_nonnegative, "Reject matrices with negative entries");
  add_common(report_cmd, common);

  auto* check_cmd = app.add_subcommand("check-matrix", "Bound, exact radius and row sums of a Matrix Market file");
  check_cmd->add_option("input", path, "Matrix Market file ('-' for stdin)")->required();
  check_cmd->add_flag("--require-nonnegative", require_nonnegative, "Reject matrices with negative entries");
  add_common(check_cmd, common);

  auto* classify_cmd = app.add_subcommand("classify", "Regular / bipartite semi-regular / other");
  classify_cmd->add_option("input", path, "Edge-list file ('-' for stdin)")->required();
  add_common(classify_cmd, common);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Property-based test run");
  add_trial_flags(fuzz_cmd, fuzz);
  fuzz_cmd->add_option("--property", fuzz.properties, "Property id; repeatable (default: all for the model)");
  fuzz_cmd->add_flag("--no-shrink", fuzz.no_shrink, "Keep violations unminimized");
  add_common(fuzz_cmd, common);

  auto* search_cmd = app.add_subcommand("search", "List generated instances where a bound is attained");
  add_trial_flags(search_cmd, fuzz);
  add_common(search_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << report::render(report::error_object(Error(Errc::InvalidConfig, e.what())), true);
    return kExitInputError;
  }

  try {
    const Tolerances tol = common.tolerances();
    if (*report_cmd) {
      out << report::render(report_for(path, tol, require_nonnegative), common.json);
      return kExitOk;
    }
    if (*check_cmd) {
      const std::string text = read_input(path);
      auto j = report::matrix_report(parse_matrix(text), {path, "matrix-market"}, tol, require_nonnegative);
      out << report::render(j, common.json);
      return kExitOk;
    }
    if (*classify_cmd) {
      const auto parsed = parse_graph(read_input(path));
      const auto* g = std::get_if<Graph>(&parsed);
      if (!g) throw Error(Errc::InvalidConfig, "classify expects an undirected graph");
      auto j = report::classification(classify(*g));
      j["label"] = describe(classify(*g));
      out << report::render(j, common.json);
      return kExitOk;
    }
    const TrialConfig config = fuzz.config(tol);
    if (*search_cmd) {
      out << report::render(report::equality_cases(equality_case_search(config), config), common.json);
      return kExitOk;
    }
    const auto ids = fuzz.properties.empty() ? default_property_ids(config.model) : fuzz.properties;
    for (const auto& id : ids) find_property(id);
    const SuiteResult result = run_suite(config, ids);
    out << report::render(report::suite_report(result, config, ids, fuzz.timing), common.json);
    return result.ok() ? kExitOk : kExitViolations;
  } catch (const Error& e) {
    err << report::render(report::error_object(e), true);
    return e.code() == Errc::NoConvergence ? kExitNoConvergence : kExitInputError;
  }
}

}  // namespace sprad
