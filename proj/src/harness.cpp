#include "sprad/harness.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <thread>

#include "sprad/error.hpp"

namespace sprad {

namespace {

constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::pair<std::string_view, Model> kModelNames[] = {
    {"gnp", Model::Gnp},
    {"random-regular", Model::RandomRegular},
    {"bipartite-semiregular", Model::BipartiteSemiregular},
    {"digraph-gnp", Model::DigraphGnp},
    {"nonneg-matrix", Model::NonnegMatrix},
    {"signed-matrix", Model::SignedMatrix},
};

[[noreturn]] void exhausted(const std::string& what) {
  throw Error(Errc::GenerationExhausted, what);
}

struct Biregular {
  int a, b, r, s;
};

std::vector<Biregular> biregular_shapes(const TrialConfig& c) {
  std::vector<Biregular> out;
  for (int n = std::max(2, c.n_min); n <= c.n_max; ++n)
    for (int a = 1; a < n; ++a) {
      const int b = n - a;
      for (int r = 1; r <= b; ++r) {
        if ((a * r) % b != 0) continue;
        const int s = a * r / b;
        if (s < 1 || s > a) continue;
        if (c.side_degrees && *c.side_degrees != std::pair{r, s}) continue;
        // A connected graph needs at least n - 1 edges.
        if (c.connected && a * r < n - 1) continue;
        out.push_back({a, b, r, s});
      }
    }
  return out;
}

template <typename Make, typename Accept>
auto retry(Make make, Accept accept, const std::string& what) {
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    auto candidate = make();
    if (accept(candidate)) return candidate;
  }
  exhausted(what + " after " + std::to_string(kRetryCap) + " attempts");
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(g.order(), std::move(e));
}

}  // namespace

std::string_view to_string(Model m) {
  for (const auto& [name, model] : kModelNames)
    if (model == m) return name;
  return "unknown";
}

Model parse_model(std::string_view name) {
  for (const auto& [n, model] : kModelNames)
    if (n == name) return model;
  throw Error(Errc::InvalidConfig, "unknown model '" + std::string(name) + "'");
}

void TrialConfig::validate() const {
  auto bad = [](const std::string& m) { throw Error(Errc::InvalidConfig, m); };
  if (trials < 1) bad("trials must be at least 1");
  if (n_min < 1 || n_max < n_min) bad("size range must satisfy 1 <= n_min <= n_max");
  if (densities.empty()) bad("at least one density is required");
  for (double p : densities)
    if (!(p > 0.0 && p <= 1.0)) bad("densities must lie in (0, 1]");
  if (threads < 1) bad("threads must be at least 1");
  if (model == Model::RandomRegular && degree < 0) bad("degree must be nonnegative");
  if (side_degrees && (side_degrees->first < 1 || side_degrees->second < 1))
    bad("side degrees must be positive");
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial_index) {
  return mix64(master ^ mix64(trial_index));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::InvalidConfig, "empty sampling range");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

Graph random_gnp(Rng& rng, int n, double p) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Digraph random_digraph(Rng& rng, int n, double p) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng.bernoulli(p)) e.emplace_back(u, v);
  return Digraph(n, std::move(e));
}

std::optional<Graph> random_regular_attempt(Rng& rng, int n, int degree) {
  // Pairing model in the Steger-Wormald variant: points are paired one
  // random suitable pair at a time, so high degrees rarely dead-end.
  std::vector<int> points;
  points.reserve(static_cast<std::size_t>(n) * degree);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < degree; ++k) points.push_back(v);
  if (points.size() % 2 != 0) return std::nullopt;
  std::set<Edge> seen;
  auto suitable = [&](int u, int v) { return u != v && !seen.count({std::min(u, v), std::max(u, v)}); };
  auto any_suitable = [&] {
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        if (suitable(points[i], points[j])) return true;
    return false;
  };
  while (!points.empty()) {
    std::size_t i = 0, j = 0;
    for (int tries = 0;; ++tries) {
      if (tries == 64) {
        if (!any_suitable()) return std::nullopt;
        tries = 0;
      }
      i = rng.below(points.size());
      j = rng.below(points.size());
      if (i != j && suitable(points[i], points[j])) break;
    }
    seen.insert({std::min(points[i], points[j]), std::max(points[i], points[j])});
    // Remove the larger index first so the smaller stays valid.
    for (std::size_t k : {std::max(i, j), std::min(i, j)}) {
      points[k] = points.back();
      points.pop_back();
    }
  }
  return Graph(n, std::vector<Edge>(seen.begin(), seen.end()));
}

Graph random_biregular(Rng& rng, int a, int b, int r, int s) {
  if (a < 1 || b < 1 || r < 1 || r > b || s > a || a * r != b * s)
    throw Error(Errc::InvalidConfig, "infeasible biregular shape");
  // Start from the wrap-around layout, then mix with degree-preserving switches.
  std::vector<std::vector<char>> bi(static_cast<std::size_t>(a), std::vector<char>(b, 0));
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int t = 0; t < r; ++t) {
      const int j = (i * r + t) % b;
      bi[i][j] = 1;
      edges.emplace_back(i, j);
    }
  const std::size_t switches = 10 * edges.size() + 10;
  for (std::size_t k = 0; k < switches; ++k) {
    const auto x = rng.below(edges.size());
    const auto y = rng.below(edges.size());
    auto& [u1, v1] = edges[x];
    auto& [u2, v2] = edges[y];
    if (u1 == u2 || v1 == v2 || bi[u1][v2] || bi[u2][v1]) continue;
    bi[u1][v1] = bi[u2][v2] = 0;
    bi[u1][v2] = bi[u2][v1] = 1;
    std::swap(v1, v2);
  }
  std::vector<Edge> out;
  for (const auto& [u, v] : edges) out.emplace_back(u, a + v);
  return Graph(a + b, std::move(out));
}

DenseMatrix random_matrix(Rng& rng, int n, double density, bool signed_entries) {
  DenseMatrix m = DenseMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!rng.bernoulli(density)) continue;
      // (0, 1] keeps sampled nonzeros nonzero.
      const double magnitude = 1.0 - rng.uniform();
      m(i, j) = signed_entries && rng.bernoulli(0.5) ? -magnitude : magnitude;
    }
  return m;
}

Instance generate(const TrialConfig& config, int trial_index) {
  config.validate();
  Rng rng(trial_seed(config.seed, static_cast<std::uint64_t>(trial_index)));
  const double p = config.densities[static_cast<std::size_t>(trial_index) % config.densities.size()];
  auto pick_n = [&] {
    return config.n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(config.n_max - config.n_min + 1)));
  };

  switch (config.model) {
    case Model::Gnp: {
      const int n = pick_n();
      return retry([&] { return random_gnp(rng, n, p); },
                   [&](const Graph& g) { return !config.connected || is_connected(g); },
                   "no connected G(n,p) sample");
    }
    case Model::DigraphGnp: {
      const int n = pick_n();
      return retry([&] { return random_digraph(rng, n, p); },
                   [&](const Digraph& d) { return !config.connected || is_strongly_connected(d); },
                   "no strongly connected digraph sample");
    }
    case Model::RandomRegular: {
      std::vector<int> feasible;
      for (int n = config.n_min; n <= config.n_max; ++n)
        if (config.degree <= n - 1 && (n * config.degree) % 2 == 0) feasible.push_back(n);
      if (feasible.empty()) exhausted("no order in range admits a regular graph of that degree");
      const int n = feasible[rng.below(feasible.size())];
      // Pair the sparser of the degree and its complement; the complement map
      // is a bijection between r-regular and (n-1-r)-regular graphs.
      const bool flip = config.degree > (n - 1) / 2;
      const int d = flip ? n - 1 - config.degree : config.degree;
      for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        auto g = random_regular_attempt(rng, n, d);
        if (!g) continue;
        Graph h = flip ? complement(*g) : std::move(*g);
        if (!config.connected || is_connected(h)) return h;
      }
      exhausted("pairing model failed " + std::to_string(kRetryCap) + " times");
    }
    case Model::BipartiteSemiregular: {
      const auto shapes = biregular_shapes(config);
      if (shapes.empty()) exhausted("no feasible biregular shape in range");
      const auto shape = shapes[rng.below(shapes.size())];
      return retry([&] { return random_biregular(rng, shape.a, shape.b, shape.r, shape.s); },
                   [&](const Graph& g) { return !config.connected || is_connected(g); },
                   "no connected biregular sample");
    }
    case Model::NonnegMatrix:
    case Model::SignedMatrix: {
      const int n = pick_n();
      const bool signed_entries = config.model == Model::SignedMatrix;
      return retry([&] { return random_matrix(rng, n, p, signed_entries); },
                   [&](const DenseMatrix& m) { return !config.connected || is_irreducible(m); },
                   "no irreducible matrix sample");
    }
  }
  exhausted("unknown model");
}

namespace {

Outcome evaluate(const Property& property, const Instance& instance, const Tolerances& tol) {
  try {
    return property.check(instance, tol);
  } catch (const Error& e) {
    return Outcome::fail({{}, {}, {}, std::string(to_string(e.code())) + ": " + e.what()});
  }
}

struct TrialRecord {
  bool generated = false;
  std::uint64_t seed = 0;
  std::optional<Instance> instance;
  std::vector<Outcome> outcomes;
};

TrialRecord run_trial(const TrialConfig& config, const std::vector<Property>& properties, int index) {
  TrialRecord rec;
  rec.seed = trial_seed(config.seed, static_cast<std::uint64_t>(index));
  try {
    rec.instance = generate(config, index);
    rec.generated = true;
  } catch (const Error& e) {
    if (e.code() != Errc::GenerationExhausted) throw;
    return rec;
  }
  rec.outcomes.reserve(properties.size());
  for (const auto& p : properties) rec.outcomes.push_back(evaluate(p, *rec.instance, config.tolerances));
  return rec;
}

}  // namespace

SuiteResult run_suite(const TrialConfig& config, const std::vector<std::string>& property_ids) {
  std::vector<Property> props;
  props.reserve(property_ids.size());
  for (const auto& id : property_ids) props.push_back(find_property(id));
  return run_suite(config, props);
}

SuiteResult run_suite(const TrialConfig& config, const std::vector<Property>& properties) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  for (const auto& p : properties) result.counts[p.id];

  std::vector<TrialRecord> records(static_cast<std::size_t>(config.trials));
  if (!properties.empty()) {
    const int workers = std::min(config.threads, config.trials);
    auto work = [&](int first) {
      for (int t = first; t < config.trials; t += workers) records[t] = run_trial(config, properties, t);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }
  }

  for (int t = 0; t < config.trials && !properties.empty(); ++t) {
    auto& rec = records[t];
    if (!rec.generated) {
      ++result.generation_failures;
      for (const auto& p : properties) ++result.counts[p.id].skip;
      continue;
    }
    for (std::size_t k = 0; k < properties.size(); ++k) {
      auto& counts = result.counts[properties[k].id];
      const Outcome& o = rec.outcomes[k];
      switch (o.status) {
        case Status::Pass: ++counts.pass; break;
        case Status::Skip: ++counts.skip; break;
        case Status::Fail: {
          ++counts.fail;
          Violation v{properties[k].id, *rec.instance, o.observed, rec.seed, t};
          if (config.shrink) v = shrink(v, properties[k], config.tolerances);
          result.violations.push_back(std::move(v));
          break;
        }
      }
    }
  }
  if (properties.empty()) result.counts.clear();
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

namespace {

Graph without_vertex(const Graph& g, int x) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) {
    if (u == x || v == x) continue;
    e.emplace_back(u > x ? u - 1 : u, v > x ? v - 1 : v);
  }
  return Graph(g.order() - 1, std::move(e));
}

Digraph without_vertex(const Digraph& d, int x) {
  std::vector<Edge> e;
  for (auto [u, v] : d.arcs()) {
    if (u == x || v == x) continue;
    e.emplace_back(u > x ? u - 1 : u, v > x ? v - 1 : v);
  }
  return Digraph(d.order() - 1, std::move(e));
}

DenseMatrix without_vertex(const DenseMatrix& m, int x) {
  const Eigen::Index n = m.rows() - 1;
  DenseMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(i < x ? i : i + 1, j < x ? j : j + 1);
  return out;
}

// Smaller neighbors of an instance, cheapest reductions first.
std::vector<Instance> reductions(const Instance& inst) {
  std::vector<Instance> out;
  if (const auto* g = std::get_if<Graph>(&inst)) {
    for (int x = g->order() - 1; g->order() > 1 && x >= 0; --x) out.emplace_back(without_vertex(*g, x));
    for (std::size_t k = 0; k < g->size(); ++k) {
      auto e = g->edges();
      e.erase(e.begin() + static_cast<std::ptrdiff_t>(k));
      out.emplace_back(Graph(g->order(), std::move(e)));
    }
  } else if (const auto* d = std::get_if<Digraph>(&inst)) {
    for (int x = d->order() - 1; d->order() > 1 && x >= 0; --x) out.emplace_back(without_vertex(*d, x));
    for (std::size_t k = 0; k < d->size(); ++k) {
      auto e = d->arcs();
      e.erase(e.begin() + static_cast<std::ptrdiff_t>(k));
      out.emplace_back(Digraph(d->order(), std::move(e)));
    }
  } else {
    const auto& m = std::get<DenseMatrix>(inst);
    for (int x = static_cast<int>(m.rows()) - 1; m.rows() > 1 && x >= 0; --x)
      out.emplace_back(without_vertex(m, x));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (m(i, j) == 0.0) continue;
        DenseMatrix z = m;
        z(i, j) = 0.0;
        out.emplace_back(std::move(z));
      }
  }
  return out;
}

}  // namespace

Violation shrink(const Violation& v, const Property& property, const Tolerances& tol) {
  Outcome current = evaluate(property, v.instance, tol);
  if (current.status != Status::Fail)
    throw Error(Errc::NotReproducible, "instance no longer fails " + property.id);
  Violation best = v;
  best.observed = current.observed;
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& candidate : reductions(best.instance)) {
      Outcome o = evaluate(property, candidate, tol);
      if (o.status == Status::Fail) {
        best.instance = std::move(candidate);
        best.observed = std::move(o.observed);
        progress = true;
        break;
      }
    }
  }
  return best;
}

Violation shrink(const Violation& v, const Tolerances& tol) {
  return shrink(v, find_property(v.property), tol);
}

void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit) {
  if (n < 1) throw Error(Errc::InvalidConfig, "order must be at least 1");
  if (n > kMaxEnumerationOrder)
    throw Error(Errc::SizeTooLarge, "exhaustive enumeration is limited to n <= " +
                                        std::to_string(kMaxEnumerationOrder));
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  const std::uint64_t subsets = std::uint64_t{1} << slots.size();
  std::vector<Edge> e;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    e.clear();
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1U) e.push_back(slots[k]);
    // Fewer than n - 1 edges cannot connect n vertices.
    if (connected_only && static_cast<int>(e.size()) < n - 1) continue;
    Graph g(n, e);
    if (!connected_only || is_connected(g)) visit(g);
  }
}

std::vector<Graph> enumerate_small_graphs(int n, bool connected_only) {
  std::vector<Graph> out;
  for_each_graph(n, connected_only, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> enumerate_graphs_up_to(int max_n, bool connected_only) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for_each_graph(n, connected_only, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<EqualityCase> equality_case_search(const TrialConfig& config) {
  config.validate();
  std::vector<EqualityCase> found;
  const auto& tol = config.tolerances;
  auto consider = [&](int t, const Instance& inst, const BoundReport& r) {
    if (r.gap && std::abs(*r.gap) <= tol.gap * std::max(1.0, r.bound))
      found.push_back({t, inst, r.kind, *r.gap});
  };
  const BoundOptions opts{tol, true};
  for (int t = 0; t < config.trials; ++t) {
    Instance inst;
    try {
      inst = generate(config, t);
    } catch (const Error& e) {
      if (e.code() == Errc::GenerationExhausted) continue;
      throw;
    }
    if (const auto* g = std::get_if<Graph>(&inst)) {
      const bool conn = is_connected(*g);
      for (MatrixKind k : kAllMatrixKinds)
        if (conn || !is_distance_family(k)) consider(t, inst, graph_bound(k, *g, opts));
    } else if (const auto* d = std::get_if<Digraph>(&inst)) {
      const bool conn = is_strongly_connected(*d);
      for (MatrixKind k : kAllMatrixKinds)
        if (conn || !is_distance_family(k)) consider(t, inst, digraph_bound(k, *d, opts));
    } else {
      const auto& m = std::get<DenseMatrix>(inst);
      consider(t, inst, is_nonnegative(m) ? general_bound(m, opts) : modulus_bound(m, opts));
    }
  }
  return found;
}

}  // namespace sprad
