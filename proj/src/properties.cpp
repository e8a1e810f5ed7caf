#include <algorithm>
#include <cmath>
#include <numeric>

#include "sprad/error.hpp"
#include "sprad/harness.hpp"

namespace sprad {

namespace {

double rel(double tol, double scale) { return tol * std::max(1.0, std::abs(scale)); }

Observation observe(const BoundReport& r, std::string note = {}) {
  Observation o;
  o.bound = r.bound;
  o.exact_radius = r.exact_radius;
  for (const auto& e : r.expressions) o.expressions.push_back(e.value);
  o.note = note.empty() ? r.kind.label() : r.kind.label() + ": " + note;
  return o;
}

Observation note_only(std::string note) { return {{}, {}, {}, std::move(note)}; }

BoundReport matrix_report(const DenseMatrix& m, const Tolerances& tol) {
  const BoundOptions opts{tol, true};
  return is_nonnegative(m) ? general_bound(m, opts) : modulus_bound(m, opts);
}

bool sound(const BoundReport& r, const Tolerances& tol) {
  return *r.exact_radius <= r.bound + rel(tol.gap, r.bound);
}

bool equal_within(const BoundReport& r, const Tolerances& tol) {
  return std::abs(*r.gap) <= rel(tol.gap, r.bound);
}

// Fixed, instance-independent permutation: reversal composed with a rotation.
std::vector<Eigen::Index> scramble(Eigen::Index n) {
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) perm[i] = (n - 1 - i + n / 3) % n;
  return perm;
}

template <typename G, typename BoundFn>
std::vector<BoundReport> all_kinds(const G& g, bool connected, const Tolerances& tol, BoundFn fn) {
  std::vector<BoundReport> out;
  for (MatrixKind k : kAllMatrixKinds)
    if (connected || !is_distance_family(k)) out.push_back(fn(k, g, BoundOptions{tol, true}));
  return out;
}

std::vector<BoundReport> graph_reports(const Graph& g, const Tolerances& tol) {
  return all_kinds(g, is_connected(g), tol, [](MatrixKind k, const Graph& x, const BoundOptions& o) {
    return graph_bound(k, x, o);
  });
}

std::vector<BoundReport> digraph_reports(const Digraph& d, const Tolerances& tol) {
  return all_kinds(d, is_strongly_connected(d), tol,
                   [](MatrixKind k, const Digraph& x, const BoundOptions& o) {
                     return digraph_bound(k, x, o);
                   });
}

Outcome soundness(const std::vector<BoundReport>& reports, const Tolerances& tol) {
  for (const auto& r : reports)
    if (!sound(r, tol)) return Outcome::fail(observe(r, "exact radius exceeds bound"));
  return Outcome::pass();
}

Outcome necessity(const std::vector<BoundReport>& reports, const Tolerances& tol) {
  bool any = false;
  for (const auto& r : reports) {
    if (!r.irreducible) continue;
    const auto verdict = equality_diagnostic(r, true, tol);
    if (!verdict.equality_holds) continue;
    any = true;
    if (verdict.violation) return Outcome::fail(observe(r, "equality with unequal expressions"));
  }
  return any ? Outcome::pass() : Outcome::skip("no irreducible equality case");
}

Outcome specialization(const std::vector<Discrepancy>& found) {
  for (const auto& d : found)
    if (d.max_abs > 1e-10)
      return Outcome::fail(note_only(std::string(to_string(d.kind)) +
                                     " discrepancy " + std::to_string(d.max_abs)));
  return Outcome::pass();
}

template <typename Fn>
Property graph_property(std::string id, std::string description, bool needs_connected, Fn fn) {
  return {std::move(id), std::move(description),
          [needs_connected, fn](const Instance& inst, const Tolerances& tol) -> Outcome {
            const auto* g = std::get_if<Graph>(&inst);
            if (!g) return Outcome::skip("not a graph");
            if (needs_connected && !is_connected(*g)) return Outcome::skip("disconnected");
            return fn(*g, tol);
          },
          Domain::Graph};
}

template <typename Fn>
Property digraph_property(std::string id, std::string description, Fn fn) {
  return {std::move(id), std::move(description),
          [fn](const Instance& inst, const Tolerances& tol) -> Outcome {
            const auto* d = std::get_if<Digraph>(&inst);
            if (!d) return Outcome::skip("not a digraph");
            return fn(*d, tol);
          },
          Domain::Digraph};
}

template <typename Fn>
Property matrix_property(std::string id, std::string description, Fn fn) {
  return {std::move(id), std::move(description),
          [fn](const Instance& inst, const Tolerances& tol) -> Outcome {
            const auto* m = std::get_if<DenseMatrix>(&inst);
            if (!m) return Outcome::skip("not a matrix");
            return fn(*m, tol);
          },
          Domain::Matrix};
}

// Equality of the bound for `kind` must coincide with `expected`.
Outcome equality_iff(const Graph& g, MatrixKind kind, bool expected, const Tolerances& tol) {
  const BoundReport r = graph_bound(kind, g, {tol, true});
  const bool equal = equal_within(r, tol);
  if (equal == expected) return Outcome::pass();
  return Outcome::fail(observe(r, equal ? "equality outside the characterized class"
                                        : "strict inequality inside the characterized class"));
}

std::vector<Property> make_builtins() {
  std::vector<Property> p;

  p.push_back(matrix_property(
      "matrix-bound-soundness", "exact radius <= row-support bound (modulus form for signed input)",
      [](const DenseMatrix& m, const Tolerances& tol) {
        const auto r = matrix_report(m, tol);
        return sound(r, tol) ? Outcome::pass() : Outcome::fail(observe(r));
      }));

  p.push_back(matrix_property(
      "matrix-equality-necessity", "irreducible equality forces equal expressions",
      [](const DenseMatrix& m, const Tolerances& tol) {
        return necessity({matrix_report(m, tol)}, tol);
      }));

  p.push_back(matrix_property(
      "abs-domination", "rho(A) <= rho(|A|)", [](const DenseMatrix& m, const Tolerances& tol) {
        const double r = spectral_radius_general(m).radius;
        const double ra = spectral_radius_general(entrywise_abs(m)).radius;
        if (r <= ra + rel(tol.gap, ra)) return Outcome::pass();
        return Outcome::fail({ra, r, {}, "rho(A) exceeds rho(|A|)"});
      }));

  p.push_back(matrix_property(
      "row-sum-sandwich", "min row sum <= rho <= max row sum; equality for constant row sums",
      [](const DenseMatrix& m, const Tolerances&) {
        if (!is_nonnegative(m)) return Outcome::skip("signed matrix");
        const auto rows = row_sum_interval(m);
        const double rho = spectral_radius_general(m).radius;
        if (!rows.contains(rho, 1e-8)) return Outcome::fail({rows.max, rho, {}, "outside row-sum interval"});
        if (rows.max - rows.min == 0.0 && is_irreducible(m) && std::abs(rho - rows.max) > 1e-8)
          return Outcome::fail({rows.max, rho, {}, "constant row sums but rho differs"});
        return Outcome::pass();
      }));

  p.push_back(matrix_property(
      "symmetric-solver-agreement", "Jacobi and QR agree on the symmetric part",
      [](const DenseMatrix& m, const Tolerances&) {
        const DenseMatrix s = 0.5 * (m + m.transpose());
        const double a = spectral_radius_symmetric(s).radius;
        const double b = spectral_radius_general(s).radius;
        if (std::abs(a - b) <= rel(1e-8, a)) return Outcome::pass();
        return Outcome::fail({a, b, {}, "jacobi vs general-qr"});
      }));

  p.push_back(matrix_property(
      "power-solver-agreement", "power iteration and QR agree on nonnegative irreducible input",
      [](const DenseMatrix& m, const Tolerances&) {
        if (!is_nonnegative(m) || !is_irreducible(m)) return Outcome::skip("not nonnegative irreducible");
        const double a = spectral_radius_nonnegative(m).radius;
        const double b = spectral_radius_general(m).radius;
        if (std::abs(a - b) <= rel(1e-8, a)) return Outcome::pass();
        return Outcome::fail({a, b, {}, "power-iteration vs general-qr"});
      }));

  p.push_back(matrix_property(
      "permutation-invariance", "simultaneous row/column permutation keeps radius and bound",
      [](const DenseMatrix& m, const Tolerances& tol) {
        const auto perm = scramble(m.rows());
        DenseMatrix pm(m.rows(), m.cols());
        for (Eigen::Index i = 0; i < m.rows(); ++i)
          for (Eigen::Index j = 0; j < m.cols(); ++j) pm(i, j) = m(perm[i], perm[j]);
        const auto a = matrix_report(m, tol);
        const auto b = matrix_report(pm, tol);
        if (std::abs(*a.exact_radius - *b.exact_radius) <= rel(1e-9, *a.exact_radius) &&
            std::abs(a.bound - b.bound) <= rel(1e-9, a.bound))
          return Outcome::pass();
        return Outcome::fail(observe(b, "permuted matrix differs"));
      }));

  p.push_back(matrix_property(
      "bound-scale-covariance", "bound(c B) = c bound(B)", [](const DenseMatrix& m, const Tolerances& tol) {
        if (!is_nonnegative(m)) return Outcome::skip("signed matrix");
        constexpr double c = 2.5;
        const BoundOptions no_exact{tol, false};
        const double a = general_bound(m, no_exact).bound;
        const double b = general_bound(c * m, no_exact).bound;
        if (std::abs(b - c * a) <= rel(1e-12, b)) return Outcome::pass();
        return Outcome::fail({b, c * a, {}, "scaled bound mismatch"});
      }));

  p.push_back(graph_property(
      "graph-bound-soundness", "all six graph bounds dominate their exact radii", false,
      [](const Graph& g, const Tolerances& tol) { return soundness(graph_reports(g, tol), tol); }));

  p.push_back(graph_property(
      "graph-specialization-identity", "closed forms equal the general bound on the built matrices",
      false, [](const Graph& g, const Tolerances&) { return specialization(specialization_check(g)); }));

  p.push_back(graph_property(
      "graph-equality-necessity", "equality on a connected graph forces equal expressions", false,
      [](const Graph& g, const Tolerances& tol) { return necessity(graph_reports(g, tol), tol); }));

  p.push_back(graph_property(
      "adjacency-equality-iff-semiregular",
      "adjacency bound is attained iff regular or bipartite semi-regular", true,
      [](const Graph& g, const Tolerances& tol) {
        return equality_iff(g, MatrixKind::Adjacency, is_regular_or_semiregular(classify(g)), tol);
      }));

  p.push_back(graph_property(
      "signless-equality-iff-regular", "signless Laplacian bound is attained iff regular", true,
      [](const Graph& g, const Tolerances& tol) {
        return equality_iff(g, MatrixKind::SignlessLaplacian, is_regular(classify(g)), tol);
      }));

  p.push_back(graph_property(
      "laplacian-equality-iff-bipartite-regular",
      "Laplacian bound is attained iff bipartite and regular", true,
      [](const Graph& g, const Tolerances& tol) {
        const bool expected = is_regular(classify(g)) && is_bipartite(g).has_value();
        return equality_iff(g, MatrixKind::Laplacian, expected, tol);
      }));

  p.push_back(graph_property(
      "laplacian-signless-bipartite", "mu <= q with equality iff bipartite", true,
      [](const Graph& g, const Tolerances& tol) {
        const double mu = exact_radius(MatrixKind::Laplacian, g).radius;
        const double q = exact_radius(MatrixKind::SignlessLaplacian, g).radius;
        if (mu > q + rel(tol.gap, q)) return Outcome::fail({q, mu, {}, "mu exceeds q"});
        const bool equal = std::abs(mu - q) <= rel(tol.gap, q);
        if (equal == is_bipartite(g).has_value()) return Outcome::pass();
        return Outcome::fail({q, mu, {}, equal ? "mu = q on a non-bipartite graph"
                                               : "mu < q on a bipartite graph"});
      }));

  p.push_back(graph_property(
      "neighbor-sum-constancy-iff-semiregular",
      "all S_i = d_i m_i equal iff regular or bipartite semi-regular", true,
      [](const Graph& g, const Tolerances&) {
        const auto s = neighbor_degree_sums(g);
        const bool constant = std::all_of(s.begin(), s.end(), [&](auto x) { return x == s.front(); });
        if (constant == is_regular_or_semiregular(classify(g))) return Outcome::pass();
        return Outcome::fail(note_only(describe(classify(g)) + (constant ? " with constant S_i" : " with varying S_i")));
      }));

  p.push_back(graph_property(
      "degree-root-constancy-iff-regular", "all d_i + sqrt(S_i) equal iff regular", true,
      [](const Graph& g, const Tolerances&) {
        const auto d = degrees(g);
        const auto s = neighbor_degree_sums(g);
        std::vector<double> e(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) e[i] = d[i] + std::sqrt(static_cast<double>(s[i]));
        const auto [lo, hi] = std::minmax_element(e.begin(), e.end());
        const bool constant = *hi - *lo <= 1e-12;
        if (constant == is_regular(classify(g))) return Outcome::pass();
        return Outcome::fail({{}, {}, e, describe(classify(g))});
      }));

  p.push_back(graph_property(
      "regular-closed-forms", "r-regular connected: rho = r and q = 2r", true,
      [](const Graph& g, const Tolerances&) {
        const auto c = classify(g);
        const auto* reg = std::get_if<Regular>(&c);
        if (!reg) return Outcome::skip("not regular");
        const double rho = exact_radius(MatrixKind::Adjacency, g).radius;
        const double q = exact_radius(MatrixKind::SignlessLaplacian, g).radius;
        if (std::abs(rho - reg->degree) <= 1e-9 && std::abs(q - 2.0 * reg->degree) <= 1e-9)
          return Outcome::pass();
        return Outcome::fail({static_cast<double>(reg->degree), rho, {q}, "closed form mismatch"});
      }));

  p.push_back(digraph_property(
      "digraph-bound-soundness", "all applicable digraph bounds dominate their exact radii",
      [](const Digraph& d, const Tolerances& tol) { return soundness(digraph_reports(d, tol), tol); }));

  p.push_back(digraph_property(
      "digraph-specialization-identity", "closed forms equal the general bound on the built matrices",
      [](const Digraph& d, const Tolerances&) { return specialization(specialization_check(d)); }));

  p.push_back(digraph_property(
      "digraph-equality-necessity", "equality on a strongly connected digraph forces equal expressions",
      [](const Digraph& d, const Tolerances& tol) { return necessity(digraph_reports(d, tol), tol); }));

  return p;
}

}  // namespace

const std::vector<Property>& builtin_properties() {
  static const std::vector<Property> props = make_builtins();
  return props;
}

const Property& find_property(std::string_view id) {
  for (const auto& p : builtin_properties())
    if (p.id == id) return p;
  throw Error(Errc::UnknownProperty, "unknown property '" + std::string(id) + "'");
}

Domain domain_of(Model m) {
  switch (m) {
    case Model::Gnp:
    case Model::RandomRegular:
    case Model::BipartiteSemiregular: return Domain::Graph;
    case Model::DigraphGnp: return Domain::Digraph;
    case Model::NonnegMatrix:
    case Model::SignedMatrix: return Domain::Matrix;
  }
  return Domain::Any;
}

std::vector<std::string> default_property_ids(Model model) {
  std::vector<std::string> ids;
  for (const auto& p : builtin_properties())
    if (p.domain == domain_of(model)) ids.push_back(p.id);
  return ids;
}

std::vector<std::string> builtin_property_ids() {
  std::vector<std::string> ids;
  for (const auto& p : builtin_properties()) ids.push_back(p.id);
  return ids;
}

}  // namespace sprad
