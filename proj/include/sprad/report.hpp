#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "sprad/bounds.hpp"
#include "sprad/formats.hpp"
#include "sprad/harness.hpp"

namespace sprad::report {

inline constexpr std::string_view kVersion = "0.1.0";

/// Reals in reports carry 9 significant digits.
double round9(double v);

struct InputInfo {
  std::string path;
  std::string format;  // "edge-list" | "matrix-market"
};

/// Report schema (keys sorted, reals rounded by round9):
///
///   input        {path, format, type: graph|digraph|matrix, n, edges|arcs|nonzeros}
///   matrices     {<kind>: block | {skipped: reason}}           graphs and digraphs
///   bound        block plus {kind: general|modulus}            matrices
///   row_sums     {min, max}                                    nonnegative matrices
///   classification, connected, bipartite                      graphs
///   strongly_connected                                         digraphs
///   irreducible, nonnegative, symmetric                        matrices
///   tolerances   {gap, eq}
///   version
///
/// where block = {exact, bound, gap, argmax, all_equal, equality, irreducible,
/// expressions, method}.
nlohmann::json graph_report(const ParsedGraph& g, const InputInfo& input, const Tolerances& tol);

/// Signed matrices go to the modulus bound unless `require_nonnegative`, in
/// which case they raise Errc::NegativeEntry.
nlohmann::json matrix_report(const DenseMatrix& m, const InputInfo& input, const Tolerances& tol,
                             bool require_nonnegative = false);

nlohmann::json bound_block(const BoundReport& r, const Tolerances& tol);
nlohmann::json classification(const GraphClass& c);

/// Byte-stable unless `timing` adds wall_seconds.
nlohmann::json suite_report(const SuiteResult& result, const TrialConfig& config,
                            const std::vector<std::string>& property_ids, bool timing = false);
nlohmann::json config_json(const TrialConfig& config);

nlohmann::json equality_cases(const std::vector<EqualityCase>& cases, const TrialConfig& config);

/// JSON (2-space indent) or flattened "dotted.key: value" lines, both key-sorted.
std::string render(const nlohmann::json& j, bool as_json);

nlohmann::json error_object(const Error& e);

}  // namespace sprad::report
