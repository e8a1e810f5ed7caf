#include "sprad/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace sprad {

namespace {

double scaled(double tol, double bound) { return tol * std::max(1.0, std::abs(bound)); }

void finalize(BoundReport& r, const Tolerances& tol) {
  r.bound = r.expressions.front().value;
  for (const auto& e : r.expressions) r.bound = std::max(r.bound, e.value);
  const double tie = scaled(tol.eq, r.bound);
  r.argmax.clear();
  for (const auto& e : r.expressions)
    if (r.bound - e.value <= tie) r.argmax.push_back(e.index);
  r.all_equal = r.spread() <= tie;
}

ExpressionValue expression(int index, double diag, double radicand) {
  return {index, diag, radicand, diag + std::sqrt(radicand)};
}

BoundReport row_support_bound(const DenseMatrix& b, BoundKind kind) {
  const Eigen::Index n = b.rows();
  std::vector<double> row_support(static_cast<std::size_t>(n), 0.0);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index j = 0; j < n; ++j)
      if (j != k && b(k, j) != 0.0) row_support[k] += 1.0;

  BoundReport r;
  r.kind = std::move(kind);
  r.expressions.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    double radicand = 0.0;
    for (Eigen::Index k = 0; k < n; ++k)
      if (k != i) radicand += row_support[k] * b(k, i) * b(k, i);
    r.expressions.push_back(expression(static_cast<int>(i), b(i, i), radicand));
  }
  r.irreducible = is_irreducible(b);
  return r;
}

// Column square sums of the distance matrix, times (n - 1).
std::vector<std::int64_t> distance_radicands(const DistanceData& dd) {
  const Eigen::Index n = dd.dist.rows();
  std::vector<std::int64_t> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    out[i] = (n - 1) * dd.dist.col(i).cwiseProduct(dd.dist.col(i)).sum();
  return out;
}

template <typename G>
BoundReport closed_form(MatrixKind kind, const G& g, BoundFamily family,
                        const std::vector<int>& degree,
                        const std::vector<std::int64_t>& neighbor_sums, bool connected) {
  BoundReport r;
  r.kind = {family, kind};
  const int n = g.order();
  r.expressions.reserve(static_cast<std::size_t>(n));
  if (is_distance_family(kind)) {
    const DistanceData dd = distance_matrix(g);
    const auto radicands = distance_radicands(dd);
    const bool with_diag = kind != MatrixKind::Distance;
    for (int i = 0; i < n; ++i)
      r.expressions.push_back(expression(
          i, with_diag ? static_cast<double>(dd.transmissions[i]) : 0.0,
          static_cast<double>(radicands[i])));
    r.irreducible = true;
  } else {
    const bool with_diag = kind != MatrixKind::Adjacency;
    for (int i = 0; i < n; ++i)
      r.expressions.push_back(expression(i, with_diag ? degree[i] : 0.0,
                                         static_cast<double>(neighbor_sums[i])));
    r.irreducible = connected;
  }
  return r;
}

}  // namespace

std::string BoundKind::label() const {
  switch (family) {
    case BoundFamily::General: return "general";
    case BoundFamily::Modulus: return "modulus";
    case BoundFamily::Graph: return "graph/" + std::string(to_string(*matrix));
    case BoundFamily::Digraph: return "digraph/" + std::string(to_string(*matrix));
  }
  return "unknown";
}

double BoundReport::spread() const {
  if (expressions.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(
      expressions.begin(), expressions.end(),
      [](const ExpressionValue& a, const ExpressionValue& b) { return a.value < b.value; });
  return hi->value - lo->value;
}

void attach_exact_radius(BoundReport& report, double radius) {
  report.exact_radius = radius;
  report.gap = report.bound - radius;
}

BoundReport general_bound(const DenseMatrix& b, const BoundOptions& opts) {
  require_valid(b);
  require_nonnegative(b);
  BoundReport r = row_support_bound(b, {BoundFamily::General, std::nullopt});
  finalize(r, opts.tol);
  if (opts.compute_exact) attach_exact_radius(r, spectral_radius_general(b).radius);
  return r;
}

BoundReport modulus_bound(const DenseMatrix& a, const BoundOptions& opts) {
  require_valid(a);
  BoundReport r = row_support_bound(entrywise_abs(a), {BoundFamily::Modulus, std::nullopt});
  finalize(r, opts.tol);
  if (opts.compute_exact) attach_exact_radius(r, spectral_radius_general(a).radius);
  return r;
}

BoundReport graph_bound(MatrixKind kind, const Graph& g, const BoundOptions& opts) {
  BoundReport r = closed_form(kind, g, BoundFamily::Graph, degrees(g), neighbor_degree_sums(g),
                              is_connected(g));
  finalize(r, opts.tol);
  if (opts.compute_exact) attach_exact_radius(r, exact_radius(kind, g).radius);
  return r;
}

BoundReport digraph_bound(MatrixKind kind, const Digraph& d, const BoundOptions& opts) {
  BoundReport r = closed_form(kind, d, BoundFamily::Digraph, out_degrees(d),
                              in_neighbor_outdegree_sums(d), is_strongly_connected(d));
  finalize(r, opts.tol);
  if (opts.compute_exact) attach_exact_radius(r, exact_radius(kind, d).radius);
  return r;
}

DiagnosticVerdict equality_diagnostic(const BoundReport& report, bool irreducible,
                                      const Tolerances& tol) {
  if (!report.exact_radius)
    throw Error(Errc::MissingExactRadius, "equality diagnostic needs the exact radius");
  DiagnosticVerdict v;
  v.spread = report.spread();
  v.equality_holds = std::abs(report.bound - *report.exact_radius) <= scaled(tol.gap, report.bound);
  v.all_expressions_equal = v.spread <= scaled(tol.eq, report.bound);
  v.violation = irreducible && v.equality_holds && v.spread > scaled(tol.necessity, report.bound);
  return v;
}

namespace {

template <typename G, typename BoundFn>
std::vector<Discrepancy> compare_with_general(const G& g, bool connected, BoundFn specialized) {
  std::vector<Discrepancy> out;
  const BoundOptions no_exact{{}, false};
  for (MatrixKind kind : kAllMatrixKinds) {
    if (is_distance_family(kind) && !connected) continue;
    const BoundReport spec = specialized(kind, g, no_exact);
    const DenseMatrix m = build(kind, g);
    const BoundReport gen = is_signed(kind) ? modulus_bound(m, no_exact) : general_bound(m, no_exact);
    double worst = 0.0;
    for (std::size_t i = 0; i < spec.expressions.size(); ++i)
      worst = std::max(worst, std::abs(spec.expressions[i].value - gen.expressions[i].value));
    out.push_back({kind, worst});
  }
  return out;
}

}  // namespace

std::vector<Discrepancy> specialization_check(const Graph& g) {
  return compare_with_general(g, is_connected(g),
                              [](MatrixKind k, const Graph& x, const BoundOptions& o) {
                                return graph_bound(k, x, o);
                              });
}

std::vector<Discrepancy> specialization_check(const Digraph& d) {
  return compare_with_general(d, is_strongly_connected(d),
                              [](MatrixKind k, const Digraph& x, const BoundOptions& o) {
                                return digraph_bound(k, x, o);
                              });
}

}  // namespace sprad
