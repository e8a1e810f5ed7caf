#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Jacobi>

#include "sprad/detail/reachability.hpp"
#include "sprad/error.hpp"

namespace sprad {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Square, finite, n >= 1. Carrier for every matrix the library handles.
using DenseMatrix = Matrix<double>;

enum class SolverMethod { SymmetricJacobi, GeneralQr, PowerIteration };

constexpr std::string_view to_string(SolverMethod m) {
  switch (m) {
    case SolverMethod::SymmetricJacobi: return "symmetric-jacobi";
    case SolverMethod::GeneralQr: return "general-qr";
    case SolverMethod::PowerIteration: return "power-iteration";
  }
  return "unknown";
}

template <typename Scalar>
struct SpectralResult {
  Scalar radius{0};
  SolverMethod method{SolverMethod::GeneralQr};
  int iterations{0};
  /// Solver-specific convergence measure; see the option structs.
  Scalar residual{0};
  std::optional<Vector<Scalar>> eigenvector;
};

/// Cyclic Jacobi. Converged when the off-diagonal Frobenius norm is at most
/// `tolerance * (1 + ||M||_F)`; the reported residual is that ratio.
template <typename Scalar>
struct JacobiOptions {
  Scalar tolerance = Scalar(1e-12);
  int max_sweeps = 100;
  Scalar symmetry_tolerance = Scalar(1e-12);
};

/// Hessenberg + Francis double-shift QR. A subdiagonal entry is deflated when
/// |h(k+1,k)| <= deflation * (|h(k,k)| + |h(k+1,k+1)|); the reported residual
/// is the largest such ratio accepted.
template <typename Scalar>
struct QrOptions {
  Scalar deflation = Scalar(1e-12);
  int iterations_per_dimension = 30;
};

/// Power iteration on M + I started from the all-ones vector. Converged when
/// successive estimates differ by at most `tolerance` relative and the
/// residual ||Mx - rho x||_inf / ||x||_inf is at most
/// `residual_tolerance * max(1, rho)`.
template <typename Scalar>
struct PowerOptions {
  Scalar tolerance = Scalar(1e-12);
  int max_iterations = 100000;
  Scalar residual_tolerance = Scalar(1e-9);
};

template <typename Derived>
void require_valid(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols())
    throw Error(Errc::NonSquare, "matrix is " + std::to_string(m.rows()) + "x" +
                                     std::to_string(m.cols()));
  if (m.rows() < 1) throw Error(Errc::InvalidMatrix, "matrix dimension must be at least 1");
  if (!m.allFinite()) throw Error(Errc::InvalidMatrix, "matrix has non-finite entries");
}

template <typename Derived>
bool is_nonnegative(const Eigen::MatrixBase<Derived>& m) {
  return (m.array() >= typename Derived::Scalar(0)).all();
}

template <typename Derived>
void require_nonnegative(const Eigen::MatrixBase<Derived>& m) {
  if (!is_nonnegative(m)) throw Error(Errc::NegativeEntry, "matrix has a negative entry");
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m,
                  typename Derived::Scalar tol = typename Derived::Scalar(1e-12)) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > tol) return false;
  return true;
}

/// Builds an n x n matrix from row-major entries and checks the invariants.
inline DenseMatrix make_dense(Eigen::Index n, std::span<const double> row_major) {
  if (n < 1) throw Error(Errc::InvalidMatrix, "matrix dimension must be at least 1");
  if (static_cast<Eigen::Index>(row_major.size()) != n * n)
    throw Error(Errc::InvalidMatrix, "expected " + std::to_string(n * n) + " entries, got " +
                                         std::to_string(row_major.size()));
  DenseMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = row_major[i * n + j];
  require_valid(m);
  return m;
}

inline DenseMatrix make_dense(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  std::vector<double> flat;
  for (const auto& r : rows) {
    if (static_cast<Eigen::Index>(r.size()) != n)
      throw Error(Errc::NonSquare, "row length differs from row count");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return make_dense(n, flat);
}

namespace detail {

template <typename Scalar>
SpectralResult<Scalar> one_by_one(Scalar entry, SolverMethod method) {
  SpectralResult<Scalar> r;
  r.radius = std::abs(entry);
  r.method = method;
  r.eigenvector = Vector<Scalar>::Ones(1);
  return r;
}

template <typename Scalar>
Scalar off_diagonal_norm(const Matrix<Scalar>& a) {
  Scalar sum(0);
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

/// In-place Householder reduction to upper Hessenberg form (similarity transform).
template <typename Scalar>
void reduce_to_hessenberg(Matrix<Scalar>& h) {
  const Eigen::Index n = h.rows();
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const Eigen::Index len = n - k - 1;
    Vector<Scalar> v = h.col(k).tail(len);
    const Scalar xnorm = v.norm();
    if (xnorm == Scalar(0)) continue;
    const Scalar alpha = v(0) > Scalar(0) ? -xnorm : xnorm;
    v(0) -= alpha;
    const Scalar vnorm = v.norm();
    if (vnorm == Scalar(0)) continue;
    v /= vnorm;
    h.bottomRightCorner(len, n - k) -= Scalar(2) * v * (v.transpose() * h.bottomRightCorner(len, n - k));
    h.rightCols(len) -= Scalar(2) * (h.rightCols(len) * v) * v.transpose();
    h(k + 1, k) = alpha;
    h.col(k).tail(len - 1).setZero();
  }
}

template <typename Scalar>
struct HessenbergEigenvalues {
  std::vector<std::complex<Scalar>> values;
  int iterations = 0;
  Scalar residual{0};
};

/// Eigenvalues of an upper Hessenberg matrix by Francis double-shift QR with
/// exceptional shifts every ten stalled iterations. Complex-conjugate pairs
/// come out of trailing 2x2 blocks. Destroys `hm`.
template <typename Scalar>
HessenbergEigenvalues<Scalar> hessenberg_eigenvalues(Matrix<Scalar>& hm, const QrOptions<Scalar>& opts) {
  using std::abs;
  using std::sqrt;
  const Eigen::Index n = hm.rows();
  // One-based view keeps the index arithmetic of the classical formulation readable.
  auto a = [&hm](Eigen::Index i, Eigen::Index j) -> Scalar& { return hm(i - 1, j - 1); };
  auto sign = [](Scalar mag, Scalar ref) { return ref >= Scalar(0) ? abs(mag) : -abs(mag); };
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();

  HessenbergEigenvalues<Scalar> out;
  out.values.resize(static_cast<std::size_t>(n));
  auto store = [&out](Eigen::Index i, Scalar re, Scalar im) {
    out.values[static_cast<std::size_t>(i - 1)] = {re, im};
  };

  Scalar anorm(0);
  for (Eigen::Index i = 1; i <= n; ++i)
    for (Eigen::Index j = std::max<Eigen::Index>(i - 1, 1); j <= n; ++j) anorm += abs(a(i, j));

  const int cap = opts.iterations_per_dimension * static_cast<int>(n);
  Eigen::Index nn = n;
  Scalar shift_total(0);
  Scalar p(0), q(0), r(0), s(0), w(0), x(0), y(0), z(0);
  while (nn >= 1) {
    int its = 0;
    Eigen::Index l;
    do {
      for (l = nn; l >= 2; --l) {
        s = abs(a(l - 1, l - 1)) + abs(a(l, l));
        if (s == Scalar(0)) s = anorm;
        const Scalar sub = abs(a(l, l - 1));
        if (sub <= opts.deflation * s) {
          if (s > Scalar(0)) out.residual = std::max(out.residual, sub / s);
          a(l, l - 1) = Scalar(0);
          break;
        }
      }
      x = a(nn, nn);
      if (l == nn) {
        store(nn, x + shift_total, Scalar(0));
        --nn;
      } else {
        y = a(nn - 1, nn - 1);
        w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          p = Scalar(0.5) * (y - x);
          q = p * p + w;
          z = sqrt(abs(q));
          x += shift_total;
          if (q >= Scalar(0)) {
            z = p + sign(z, p);
            store(nn - 1, x + z, Scalar(0));
            store(nn, z != Scalar(0) ? x - w / z : x + z, Scalar(0));
          } else {
            store(nn - 1, x + p, -z);
            store(nn, x + p, z);
          }
          nn -= 2;
        } else {
          if (out.iterations >= cap)
            throw Error(Errc::NoConvergence,
                        "QR iteration exceeded " + std::to_string(cap) + " iterations");
          if (its > 0 && its % 10 == 0) {
            shift_total += x;
            for (Eigen::Index i = 1; i <= nn; ++i) a(i, i) -= x;
            s = abs(a(nn, nn - 1)) + abs(a(nn - 1, nn - 2));
            y = x = Scalar(0.75) * s;
            w = Scalar(-0.4375) * s * s;
          }
          ++its;
          ++out.iterations;
          Eigen::Index m;
          for (m = nn - 2; m >= l; --m) {
            z = a(m, m);
            r = x - z;
            s = y - z;
            p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s;
            r = a(m + 2, m + 1);
            s = abs(p) + abs(q) + abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const Scalar u = abs(a(m, m - 1)) * (abs(q) + abs(r));
            const Scalar v = abs(p) * (abs(a(m - 1, m - 1)) + abs(z) + abs(a(m + 1, m + 1)));
            if (u <= eps * v) break;
          }
          for (Eigen::Index i = m + 2; i <= nn; ++i) {
            a(i, i - 2) = Scalar(0);
            if (i != m + 2) a(i, i - 3) = Scalar(0);
          }
          for (Eigen::Index k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = Scalar(0);
              if (k != nn - 1) r = a(k + 2, k - 1);
              x = abs(p) + abs(q) + abs(r);
              if (x != Scalar(0)) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            s = sign(sqrt(p * p + q * q + r * r), p);
            if (s != Scalar(0)) {
              if (k == m) {
                if (l != m) a(k, k - 1) = -a(k, k - 1);
              } else {
                a(k, k - 1) = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (Eigen::Index j = k; j <= nn; ++j) {
                p = a(k, j) + q * a(k + 1, j);
                if (k != nn - 1) {
                  p += r * a(k + 2, j);
                  a(k + 2, j) -= p * z;
                }
                a(k + 1, j) -= p * y;
                a(k, j) -= p * x;
              }
              const Eigen::Index mmin = nn < k + 3 ? nn : k + 3;
              for (Eigen::Index i = l; i <= mmin; ++i) {
                p = x * a(i, k) + y * a(i, k + 1);
                if (k != nn - 1) {
                  p += z * a(i, k + 2);
                  a(i, k + 2) -= p * r;
                }
                a(i, k + 1) -= p * q;
                a(i, k) -= p;
              }
            }
          }
        }
      }
    } while (l < nn - 1);
  }
  return out;
}

}  // namespace detail

/// Spectral radius of a real symmetric matrix by cyclic Jacobi rotations.
/// The eigenvector of the largest-modulus eigenvalue is returned as well.
template <typename Derived>
SpectralResult<typename Derived::Scalar> spectral_radius_symmetric(
    const Eigen::MatrixBase<Derived>& m,
    const JacobiOptions<typename Derived::Scalar>& opts = {}) {
  using Scalar = typename Derived::Scalar;
  require_valid(m);
  if (!is_symmetric(m, opts.symmetry_tolerance))
    throw Error(Errc::NotSymmetric, "matrix is not symmetric");
  if (m.rows() == 1) return detail::one_by_one<Scalar>(m(0, 0), SolverMethod::SymmetricJacobi);

  const Eigen::Index n = m.rows();
  Matrix<Scalar> a = m;
  Matrix<Scalar> v = Matrix<Scalar>::Identity(n, n);
  const Scalar scale = Scalar(1) + a.norm();
  const Scalar threshold = opts.tolerance * scale;

  int sweeps = 0;
  Scalar off = detail::off_diagonal_norm(a);
  while (off > threshold) {
    if (sweeps == opts.max_sweeps)
      throw Error(Errc::NoConvergence,
                  "Jacobi exceeded " + std::to_string(opts.max_sweeps) + " sweeps");
    ++sweeps;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == Scalar(0)) continue;
        Eigen::JacobiRotation<Scalar> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        a(p, q) = a(q, p) = Scalar(0);
        v.applyOnTheRight(p, q, rot);
      }
    }
    off = detail::off_diagonal_norm(a);
  }

  // Among eigenvalues of equal modulus (bipartite spectra), prefer the positive one.
  const Scalar top = a.diagonal().cwiseAbs().maxCoeff();
  Eigen::Index best = -1;
  for (Eigen::Index i = 0; i < n; ++i)
    if (std::abs(a(i, i)) >= top - threshold && (best < 0 || a(i, i) > a(best, best))) best = i;
  SpectralResult<Scalar> result;
  result.radius = top;
  result.method = SolverMethod::SymmetricJacobi;
  result.iterations = sweeps;
  result.residual = off / scale;
  result.eigenvector = v.col(best);
  return result;
}

/// All eigenvalues of a general real matrix (order unspecified).
template <typename Derived>
std::vector<std::complex<typename Derived::Scalar>> eigenvalues_general(
    const Eigen::MatrixBase<Derived>& m,
    const QrOptions<typename Derived::Scalar>& opts = {}) {
  using Scalar = typename Derived::Scalar;
  require_valid(m);
  Matrix<Scalar> h = m;
  detail::reduce_to_hessenberg(h);
  return detail::hessenberg_eigenvalues(h, opts).values;
}

/// Largest eigenvalue modulus of any real matrix; complex pairs included.
template <typename Derived>
SpectralResult<typename Derived::Scalar> spectral_radius_general(
    const Eigen::MatrixBase<Derived>& m,
    const QrOptions<typename Derived::Scalar>& opts = {}) {
  using Scalar = typename Derived::Scalar;
  require_valid(m);
  if (m.rows() == 1) return detail::one_by_one<Scalar>(m(0, 0), SolverMethod::GeneralQr);

  Matrix<Scalar> h = m;
  detail::reduce_to_hessenberg(h);
  const auto eig = detail::hessenberg_eigenvalues(h, opts);

  SpectralResult<Scalar> result;
  result.method = SolverMethod::GeneralQr;
  result.iterations = eig.iterations;
  result.residual = eig.residual;
  for (const auto& lambda : eig.values) result.radius = std::max(result.radius, std::abs(lambda));
  return result;
}

/// Perron root of a nonnegative matrix. The +I shift makes every irreducible
/// input primitive, so periodic matrices (directed cycles) converge too.
/// Reducible inputs with tied dominant blocks may raise NoConvergence.
template <typename Derived>
SpectralResult<typename Derived::Scalar> spectral_radius_nonnegative(
    const Eigen::MatrixBase<Derived>& m,
    const PowerOptions<typename Derived::Scalar>& opts = {}) {
  using Scalar = typename Derived::Scalar;
  require_valid(m);
  require_nonnegative(m);
  if (m.rows() == 1) return detail::one_by_one<Scalar>(m(0, 0), SolverMethod::PowerIteration);

  const Eigen::Index n = m.rows();
  const Matrix<Scalar> shifted = m + Matrix<Scalar>::Identity(n, n);
  Vector<Scalar> x = Vector<Scalar>::Ones(n);
  Scalar previous(-1);
  for (int it = 1; it <= opts.max_iterations; ++it) {
    // x is scaled to max entry 1 and stays positive because shifted >= I.
    const Vector<Scalar> y = shifted * x;
    const Scalar lambda = y.maxCoeff();
    const Scalar residual = (y - lambda * x).cwiseAbs().maxCoeff();
    const Scalar rho = lambda - Scalar(1);
    if (std::abs(lambda - previous) <= opts.tolerance * lambda &&
        residual <= opts.residual_tolerance * std::max(Scalar(1), rho)) {
      SpectralResult<Scalar> result;
      result.radius = std::max(rho, Scalar(0));
      result.method = SolverMethod::PowerIteration;
      result.iterations = it;
      result.residual = residual;
      result.eigenvector = x;
      return result;
    }
    previous = lambda;
    x = y / lambda;
  }
  throw Error(Errc::NoConvergence,
              "power iteration exceeded " + std::to_string(opts.max_iterations) + " iterations");
}

template <typename Scalar>
struct RowSumInterval {
  Scalar min{0};
  Scalar max{0};
  bool contains(Scalar value, Scalar tol = Scalar(0)) const {
    return value >= min - tol && value <= max + tol;
  }
};

/// Smallest and largest row sums; they sandwich the Perron root.
template <typename Derived>
RowSumInterval<typename Derived::Scalar> row_sum_interval(const Eigen::MatrixBase<Derived>& m) {
  require_valid(m);
  require_nonnegative(m);
  const auto sums = m.rowwise().sum().eval();
  return {sums.minCoeff(), sums.maxCoeff()};
}

template <typename Derived>
Matrix<typename Derived::Scalar> entrywise_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs();
}

/// Support digraph (arc i -> j iff m(i,j) != 0, i != j) adjacency lists.
template <typename Derived>
detail::AdjacencyLists support_digraph(const Eigen::MatrixBase<Derived>& m) {
  detail::AdjacencyLists adj(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != typename Derived::Scalar(0)) adj[i].push_back(static_cast<int>(j));
  return adj;
}

template <typename Derived>
bool is_irreducible(const Eigen::MatrixBase<Derived>& m) {
  return detail::strongly_connected(support_digraph(m));
}

}  // namespace sprad
