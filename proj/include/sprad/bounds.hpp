#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sprad/graphs.hpp"
#include "sprad/linalg.hpp"
#include "sprad/spectra.hpp"

namespace sprad {

/// All comparisons are relative: `x <= tol * max(1, bound)`.
struct Tolerances {
  /// Bound equality: |bound - exact radius|.
  double gap = 1e-8;
  /// Expression equality reported in BoundReport::all_equal and argmax ties.
  double eq = 1e-9;
  /// Spread allowed among the expressions when equality holds on an irreducible input.
  double necessity = 1e-6;
};

/// One per-row term c_i + sqrt(s_i) of the bound.
struct ExpressionValue {
  int index = 0;
  double diag_term = 0.0;
  double radicand = 0.0;
  double value = 0.0;
};

enum class BoundFamily { General, Modulus, Graph, Digraph };

struct BoundKind {
  BoundFamily family = BoundFamily::General;
  std::optional<MatrixKind> matrix;
  /// "general", "modulus", "graph/adjacency", "digraph/distance-laplacian", ...
  std::string label() const;
};

struct BoundReport {
  BoundKind kind;
  std::vector<ExpressionValue> expressions;
  double bound = 0.0;
  std::vector<int> argmax;
  std::optional<double> exact_radius;
  std::optional<double> gap;
  bool all_equal = false;
  bool irreducible = false;

  /// max e_i - min e_i.
  double spread() const;
};

struct BoundOptions {
  Tolerances tol;
  /// Also run the exact solver and fill exact_radius / gap.
  bool compute_exact = true;
};

/// Row-support bound for a nonnegative matrix: with l_k the number of nonzero
/// off-diagonal entries of row k,
///   rho(B) <= max_i { b_ii + sqrt(sum_{k != i} l_k * b_ki^2) }.
/// Note the radicand runs down column i, weighted by row counts. Nonzero is an
/// exact `!= 0` test; pre-threshold noisy inputs. Throws Errc::NegativeEntry.
BoundReport general_bound(const DenseMatrix& b, const BoundOptions& opts = {});

/// The same bound on |A| for a matrix with entries of any sign. Dominates
/// rho(A) because rho(A) <= rho(|A|).
BoundReport modulus_bound(const DenseMatrix& a, const BoundOptions& opts = {});

/// Closed forms in graph data with exact integer radicands:
///   adjacency                     sqrt(S_i)
///   laplacian, signless           d_i + sqrt(S_i)
///   distance                      sqrt((n-1) sum_k d_ki^2)
///   distance (signless) laplacian D_i + sqrt((n-1) sum_k d_ki^2)
/// Distance kinds throw Errc::Disconnected on disconnected input.
BoundReport graph_bound(MatrixKind kind, const Graph& g, const BoundOptions& opts = {});

/// Digraph analogues with T_i (in-neighbor out-degree sums) in place of S_i,
/// out-degrees d_i^+, transmissions D_i^+ and directed distances d_ki.
BoundReport digraph_bound(MatrixKind kind, const Digraph& d, const BoundOptions& opts = {});

/// Fills exact_radius and gap.
void attach_exact_radius(BoundReport& report, double radius);

/// Outcome of checking the equality clause. Only a necessary condition: equal
/// expressions do not certify equality.
struct DiagnosticVerdict {
  bool equality_holds = false;
  bool all_expressions_equal = false;
  double spread = 0.0;
  /// irreducible && equality_holds && spread beyond the necessity tolerance.
  bool violation = false;
};

/// Throws Errc::MissingExactRadius when the report has no exact radius.
DiagnosticVerdict equality_diagnostic(const BoundReport& report, bool irreducible,
                                      const Tolerances& tol = {});

struct Discrepancy {
  MatrixKind kind;
  double max_abs;
};

/// Compares each applicable closed form against the general (or modulus)
/// bound evaluated on the built matrix, index by index. Distance kinds are
/// skipped for disconnected inputs.
std::vector<Discrepancy> specialization_check(const Graph& g);
std::vector<Discrepancy> specialization_check(const Digraph& d);

}  // namespace sprad
