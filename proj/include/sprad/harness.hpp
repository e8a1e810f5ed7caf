#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sprad/bounds.hpp"
#include "sprad/graphs.hpp"
#include "sprad/linalg.hpp"

namespace sprad {

enum class Model { Gnp, RandomRegular, BipartiteSemiregular, DigraphGnp, NonnegMatrix, SignedMatrix };

std::string_view to_string(Model m);
/// "gnp", "random-regular", "bipartite-semiregular", "digraph-gnp",
/// "nonneg-matrix", "signed-matrix". Throws Errc::InvalidConfig.
Model parse_model(std::string_view name);

struct TrialConfig {
  Model model = Model::Gnp;
  int n_min = 1;
  int n_max = 10;
  /// Edge/arc/entry probability, cycled by trial index.
  std::vector<double> densities{0.5};
  /// random-regular: vertex degree.
  int degree = 3;
  /// bipartite-semiregular: fixed (r, s) side degrees; any feasible pair when empty.
  std::optional<std::pair<int, int>> side_degrees;
  int trials = 100;
  std::uint64_t seed = 0;
  Tolerances tolerances;
  /// Graphs connected, digraphs strongly connected, matrices irreducible.
  bool connected = true;
  bool shrink = true;
  int threads = 1;

  /// Throws Errc::InvalidConfig.
  void validate() const;
};

using Instance = std::variant<Graph, Digraph, DenseMatrix>;

inline constexpr int kRetryCap = 1000;

/// Per-trial seed; stable across releases so failures can be replayed from
/// (master seed, trial index) alone.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial_index);

/// 64-bit Mersenne Twister with distribution code owned here, so streams are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p) { return uniform() < p; }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

Graph random_gnp(Rng& rng, int n, double p);
Digraph random_digraph(Rng& rng, int n, double p);
/// Pairing model, one random suitable (loop- and multi-edge-free) pair at a
/// time; std::nullopt when no suitable pair remains.
std::optional<Graph> random_regular_attempt(Rng& rng, int n, int degree);
/// Sides 0..a-1 (degree r) and a..a+b-1 (degree s); requires a * r == b * s.
Graph random_biregular(Rng& rng, int a, int b, int r, int s);
DenseMatrix random_matrix(Rng& rng, int n, double density, bool signed_entries);

/// Deterministic in (config.seed, trial_index). Throws Errc::GenerationExhausted
/// when conditioning fails kRetryCap times or the parameters are infeasible.
Instance generate(const TrialConfig& config, int trial_index);

enum class Status { Pass, Fail, Skip };

struct Observation {
  std::optional<double> bound;
  std::optional<double> exact_radius;
  std::vector<double> expressions;
  std::string note;
};

struct Outcome {
  Status status = Status::Skip;
  Observation observed;

  static Outcome pass() { return {Status::Pass, {}}; }
  static Outcome skip(std::string why = {}) { return {Status::Skip, {{}, {}, {}, std::move(why)}}; }
  static Outcome fail(Observation o) { return {Status::Fail, std::move(o)}; }
};

/// Which instances a property inspects; others are skipped.
enum class Domain { Graph, Digraph, Matrix, Any };

struct Property {
  std::string id;
  std::string description;
  std::function<Outcome(const Instance&, const Tolerances&)> check;
  Domain domain = Domain::Any;
};

Domain domain_of(Model m);

const std::vector<Property>& builtin_properties();
/// Throws Errc::UnknownProperty.
const Property& find_property(std::string_view id);
std::vector<std::string> builtin_property_ids();
/// Builtin properties that inspect the instances `model` generates.
std::vector<std::string> default_property_ids(Model model);

struct PropertyCounts {
  int pass = 0;
  int fail = 0;
  int skip = 0;
};

struct Violation {
  std::string property;
  Instance instance;
  Observation observed;
  std::uint64_t seed = 0;
  int trial_index = 0;
};

struct SuiteResult {
  std::map<std::string, PropertyCounts> counts;
  /// One entry per failure, sorted by trial index then property id.
  std::vector<Violation> violations;
  int generation_failures = 0;
  double wall_seconds = 0.0;

  bool ok() const { return violations.empty(); }
};

SuiteResult run_suite(const TrialConfig& config, const std::vector<std::string>& property_ids);
SuiteResult run_suite(const TrialConfig& config, const std::vector<Property>& properties);

/// Greedy minimization: drop an edge/arc, delete a vertex, or zero a matrix
/// entry while the property still fails; repeats to a fixpoint. Throws
/// Errc::NotReproducible when the stored instance does not fail.
Violation shrink(const Violation& v, const Property& property, const Tolerances& tol = {});
Violation shrink(const Violation& v, const Tolerances& tol = {});

inline constexpr int kMaxEnumerationOrder = 7;

/// Every labeled simple graph on exactly n vertices (edge-subset order).
/// Throws Errc::SizeTooLarge for n > 7.
void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_small_graphs(int n, bool connected_only);
/// Orders 1..max_n.
std::vector<Graph> enumerate_graphs_up_to(int max_n, bool connected_only);

struct EqualityCase {
  int trial_index = 0;
  Instance instance;
  BoundKind kind;
  double gap = 0.0;
};

/// Generated instances whose bound meets the exact radius within the gap
/// tolerance, for every applicable bound kind. Exploration only.
std::vector<EqualityCase> equality_case_search(const TrialConfig& config);

}  // namespace sprad
