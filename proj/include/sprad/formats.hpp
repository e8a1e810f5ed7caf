#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "sprad/graphs.hpp"
#include "sprad/harness.hpp"
#include "sprad/linalg.hpp"

namespace sprad {

using ParsedGraph = std::variant<Graph, Digraph>;

/// Edge-list text:
///
///     # comment
///     graph 3 2        (or "digraph n m")
///     0 1
///     1 2
///
/// Vertices are 0-based; '#' starts a comment anywhere on a line. Malformed
/// text raises Errc::ParseError, loops / duplicates / out-of-range endpoints
/// raise Errc::InvariantViolation; both carry the 1-based line number.
ParsedGraph parse_graph(std::string_view text);
std::string serialize(const Graph& g);
std::string serialize(const Digraph& d);

/// Matrix Market "matrix coordinate real general" (1-based triples, unlisted
/// entries zero, repeated triples summed) or "matrix array real general"
/// (column-major). "integer" fields are accepted as well. Non-square sizes
/// raise Errc::NonSquare.
DenseMatrix parse_matrix(std::string_view text);
/// Array format with round-trip precision.
std::string serialize(const DenseMatrix& m);

std::string serialize(const Instance& inst);

/// True when the text starts (after blank/comment lines) with a Matrix Market banner.
bool looks_like_matrix_market(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace sprad
