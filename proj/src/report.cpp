#include "sprad/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace sprad::report {

using nlohmann::json;

double round9(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no "-0" in reports
}

namespace {

json tolerances_json(const Tolerances& tol) {
  return {{"gap", tol.gap}, {"eq", tol.eq}, {"necessity", tol.necessity}};
}

json observation_json(const Observation& o) {
  json j = json::object();
  if (o.bound) j["bound"] = round9(*o.bound);
  if (o.exact_radius) j["exact"] = round9(*o.exact_radius);
  json e = json::array();
  for (double x : o.expressions) e.push_back(round9(x));
  j["expressions"] = e;
  j["note"] = o.note;
  return j;
}

json instance_type(const Instance& inst) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Graph>) return "graph";
        else if constexpr (std::is_same_v<T, Digraph>) return "digraph";
        else return "matrix";
      },
      inst);
}

void flatten(const json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), os);
  } else if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    // Multi-line strings (serialized instances) stay JSON-escaped.
    os << prefix << ": " << (s.find('\n') == std::string::npos ? s : j.dump()) << '\n';
  } else {
    os << prefix << ": " << j.dump() << '\n';
  }
}

}  // namespace

json bound_block(const BoundReport& r, const Tolerances& tol) {
  json b;
  b["bound"] = round9(r.bound);
  b["argmax"] = r.argmax;
  b["all_equal"] = r.all_equal;
  b["irreducible"] = r.irreducible;
  json e = json::array();
  for (const auto& x : r.expressions) e.push_back(round9(x.value));
  b["expressions"] = e;
  if (r.exact_radius) {
    b["exact"] = round9(*r.exact_radius);
    b["gap"] = round9(*r.gap);
    b["equality"] = equality_diagnostic(r, r.irreducible, tol).equality_holds;
  }
  return b;
}

json classification(const GraphClass& c) {
  if (const auto* reg = std::get_if<Regular>(&c)) return {{"class", "regular"}, {"degree", reg->degree}};
  if (const auto* bsr = std::get_if<BipartiteSemiRegular>(&c))
    return {{"class", "bipartite-semiregular"},
            {"r", bsr->r},
            {"s", bsr->s},
            {"parts", json::array({bsr->parts.first, bsr->parts.second})}};
  return {{"class", "other"}};
}

json graph_report(const ParsedGraph& parsed, const InputInfo& input, const Tolerances& tol) {
  json j;
  j["version"] = kVersion;
  j["tolerances"] = tolerances_json(tol);
  const BoundOptions opts{tol, true};
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        constexpr bool directed = std::is_same_v<T, Digraph>;
        bool connected = false;
        if constexpr (directed) {
          connected = is_strongly_connected(g);
          j["strongly_connected"] = connected;
        } else {
          connected = is_connected(g);
          j["connected"] = connected;
          j["bipartite"] = is_bipartite(g).has_value();
          j["classification"] = classification(classify(g));
          j["classification"]["label"] = describe(classify(g));
        }
        j["input"] = {{"path", input.path},
                      {"format", input.format},
                      {"type", directed ? "digraph" : "graph"},
                      {"n", g.order()},
                      {directed ? "arcs" : "edges", g.size()}};
        json blocks = json::object();
        for (MatrixKind k : kAllMatrixKinds) {
          const std::string name(to_string(k));
          if (is_distance_family(k) && !connected) {
            blocks[name] = {{"skipped", directed ? "not strongly connected" : "disconnected"}};
            continue;
          }
          BoundReport r;
          if constexpr (directed) r = digraph_bound(k, g, opts);
          else r = graph_bound(k, g, opts);
          blocks[name] = bound_block(r, tol);
          blocks[name]["method"] = directed ? "general-qr" : "symmetric-jacobi";
        }
        j["matrices"] = blocks;
      },
      parsed);
  return j;
}

json matrix_report(const DenseMatrix& m, const InputInfo& input, const Tolerances& tol,
                   bool require_nonnegative_input) {
  require_valid(m);
  const bool nonneg = is_nonnegative(m);
  if (require_nonnegative_input && !nonneg)
    throw Error(Errc::NegativeEntry, "matrix has a negative entry (--require-nonnegative)");
  const BoundOptions opts{tol, true};
  const BoundReport r = nonneg ? general_bound(m, opts) : modulus_bound(m, opts);

  json j;
  j["version"] = kVersion;
  j["tolerances"] = tolerances_json(tol);
  j["input"] = {{"path", input.path},
                {"format", input.format},
                {"type", "matrix"},
                {"n", m.rows()},
                {"nonzeros", (m.array() != 0.0).count()}};
  j["nonnegative"] = nonneg;
  j["irreducible"] = r.irreducible;
  j["symmetric"] = is_symmetric(m);
  j["bound"] = bound_block(r, tol);
  j["bound"]["kind"] = r.kind.label();
  j["bound"]["method"] = "general-qr";
  if (nonneg) {
    const auto rows = row_sum_interval(m);
    j["row_sums"] = {{"min", round9(rows.min)}, {"max", round9(rows.max)}};
  }
  return j;
}

json config_json(const TrialConfig& c) {
  json j;
  j["model"] = to_string(c.model);
  j["n_min"] = c.n_min;
  j["n_max"] = c.n_max;
  j["densities"] = c.densities;
  if (c.model == Model::RandomRegular) j["degree"] = c.degree;
  if (c.side_degrees) j["side_degrees"] = {c.side_degrees->first, c.side_degrees->second};
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["connected"] = c.connected;
  j["shrink"] = c.shrink;
  j["tolerances"] = tolerances_json(c.tolerances);
  return j;
}

json suite_report(const SuiteResult& result, const TrialConfig& config,
                  const std::vector<std::string>& property_ids, bool timing) {
  json j;
  j["version"] = kVersion;
  j["config"] = config_json(config);
  json props = json::object();
  for (const auto& id : property_ids) {
    const auto it = result.counts.find(id);
    const PropertyCounts c = it == result.counts.end() ? PropertyCounts{} : it->second;
    props[id] = {{"pass", c.pass}, {"fail", c.fail}, {"skip", c.skip}};
  }
  j["properties"] = props;
  json violations = json::array();
  for (const auto& v : result.violations)
    violations.push_back({{"property", v.property},
                          {"trial", v.trial_index},
                          {"seed", v.seed},
                          {"type", instance_type(v.instance)},
                          {"instance", serialize(v.instance)},
                          {"observed", observation_json(v.observed)}});
  j["violations"] = violations;
  j["generation_failures"] = result.generation_failures;
  j["ok"] = result.ok();
  if (timing) j["wall_seconds"] = round9(result.wall_seconds);
  return j;
}

json equality_cases(const std::vector<EqualityCase>& cases, const TrialConfig& config) {
  json j;
  j["version"] = kVersion;
  j["config"] = config_json(config);
  json list = json::array();
  for (const auto& c : cases)
    list.push_back({{"trial", c.trial_index},
                    {"kind", c.kind.label()},
                    {"gap", round9(c.gap)},
                    {"type", instance_type(c.instance)},
                    {"instance", serialize(c.instance)}});
  j["cases"] = list;
  j["count"] = cases.size();
  return j;
}

std::string render(const json& j, bool as_json) {
  if (as_json) return j.dump(2) + "\n";
  std::ostringstream os;
  flatten(j, "", os);
  return os.str();
}

json error_object(const Error& e) {
  json err = {{"code", to_string(e.code())}, {"message", e.what()}};
  if (e.line() > 0) err["line"] = e.line();
  return {{"error", err}};
}

}  // namespace sprad::report
