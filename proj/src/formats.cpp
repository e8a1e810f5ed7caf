#include "sprad/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "sprad/error.hpp"

namespace sprad {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<std::string> split(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Nonblank lines with comments removed; `comment` starts a comment anywhere
// when `anywhere`, otherwise only at the first character.
std::vector<Line> lines_of(std::string_view text, char comment, bool anywhere) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (anywhere) {
      if (auto c = raw.find(comment); c != std::string_view::npos) raw = raw.substr(0, c);
    } else if (!raw.empty() && raw.front() == comment) {
      raw = {};
    }
    auto tokens = split(raw);
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what, line);
}

long long to_integer(const std::string& tok, int line) {
  long long v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end) parse_error(line, "expected an integer, got '" + tok + "'");
  return v;
}

double to_real(const std::string& tok, int line) {
  // from_chars for double is not available in every supported libstdc++.
  std::istringstream is(tok);
  is.imbue(std::locale::classic());
  double v = 0.0;
  is >> v;
  if (!is || is.peek() != std::char_traits<char>::eof())
    parse_error(line, "expected a real number, got '" + tok + "'");
  if (!std::isfinite(v)) parse_error(line, "non-finite value '" + tok + "'");
  return v;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename G>
std::string edge_list(const char* tag, const G& g, const std::vector<Edge>& pairs) {
  std::ostringstream os;
  os << tag << ' ' << g.order() << ' ' << pairs.size() << '\n';
  for (const auto& [u, v] : pairs) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
  const auto lines = lines_of(text, '#', true);
  if (lines.empty()) parse_error(1, "missing header 'graph|digraph n m'");
  const Line& head = lines.front();
  if (head.tokens.size() != 3 || (head.tokens[0] != "graph" && head.tokens[0] != "digraph"))
    parse_error(head.number, "header must be 'graph n m' or 'digraph n m'");
  const bool directed = head.tokens[0] == "digraph";
  const long long n = to_integer(head.tokens[1], head.number);
  const long long m = to_integer(head.tokens[2], head.number);
  if (n < 1) parse_error(head.number, "vertex count must be at least 1");
  if (m < 0) parse_error(head.number, "edge count must be nonnegative");
  if (static_cast<long long>(lines.size()) - 1 != m)
    parse_error(lines.size() > static_cast<std::size_t>(m) + 1 ? lines[m + 1].number : lines.back().number,
                "header announces " + std::to_string(m) + " edges, found " +
                    std::to_string(lines.size() - 1));

  std::vector<Edge> pairs;
  std::vector<Edge> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens.size() != 2) parse_error(l.number, "expected 'u v'");
    const long long u = to_integer(l.tokens[0], l.number);
    const long long v = to_integer(l.tokens[1], l.number);
    auto invariant = [&](const std::string& what) {
      throw Error(Errc::InvariantViolation, "line " + std::to_string(l.number) + ": " + what, l.number);
    };
    if (u < 0 || u >= n || v < 0 || v >= n) invariant("endpoint outside [0, " + std::to_string(n) + ")");
    if (u == v) invariant("loop at vertex " + std::to_string(u));
    Edge e{static_cast<int>(u), static_cast<int>(v)};
    Edge key = directed ? e : Edge{std::min(e.first, e.second), std::max(e.first, e.second)};
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      invariant(directed ? "duplicate arc" : "duplicate edge");
    seen.push_back(key);
    pairs.push_back(e);
  }
  if (directed) return Digraph(static_cast<int>(n), std::move(pairs));
  return Graph(static_cast<int>(n), std::move(pairs));
}

std::string serialize(const Graph& g) { return edge_list("graph", g, g.edges()); }
std::string serialize(const Digraph& d) { return edge_list("digraph", d, d.arcs()); }

bool looks_like_matrix_market(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) return false;
  constexpr std::string_view banner = "%%matrixmarket";
  const auto head = text.substr(start, banner.size());
  return head.size() == banner.size() &&
         std::equal(head.begin(), head.end(), banner.begin(),
                    [](char c, char b) { return std::tolower(static_cast<unsigned char>(c)) == b; });
}

DenseMatrix parse_matrix(std::string_view text) {
  if (!looks_like_matrix_market(text)) parse_error(1, "missing %%MatrixMarket banner");
  // The banner itself begins with '%', so read it before dropping comments.
  const auto banner_lines = lines_of(text, '\0', false);
  const Line& banner = banner_lines.front();
  if (banner.tokens.size() != 5) parse_error(banner.number, "banner must have five fields");
  const std::string object = lower(banner.tokens[1]);
  const std::string layout = lower(banner.tokens[2]);
  const std::string field = lower(banner.tokens[3]);
  const std::string symmetry = lower(banner.tokens[4]);
  if (object != "matrix") parse_error(banner.number, "object must be 'matrix'");
  if (layout != "coordinate" && layout != "array")
    parse_error(banner.number, "format must be 'coordinate' or 'array'");
  if (field != "real" && field != "integer") parse_error(banner.number, "field must be 'real'");
  if (symmetry != "general") parse_error(banner.number, "only 'general' symmetry is supported");

  const auto lines = lines_of(text, '%', false);
  if (lines.empty()) parse_error(banner.number + 1, "missing size line");
  const Line& size = lines.front();
  const bool coordinate = layout == "coordinate";
  if (size.tokens.size() != (coordinate ? 3U : 2U))
    parse_error(size.number, coordinate ? "size line must be 'rows cols nnz'" : "size line must be 'rows cols'");
  const long long rows = to_integer(size.tokens[0], size.number);
  const long long cols = to_integer(size.tokens[1], size.number);
  if (rows < 1 || cols < 1) parse_error(size.number, "dimensions must be positive");
  if (rows != cols)
    throw Error(Errc::NonSquare,
                "line " + std::to_string(size.number) + ": matrix is " + std::to_string(rows) + "x" +
                    std::to_string(cols),
                size.number);

  DenseMatrix m = DenseMatrix::Zero(rows, cols);
  if (coordinate) {
    const long long nnz = to_integer(size.tokens[2], size.number);
    if (nnz < 0) parse_error(size.number, "entry count must be nonnegative");
    if (static_cast<long long>(lines.size()) - 1 != nnz)
      parse_error(lines.back().number, "size line announces " + std::to_string(nnz) + " entries, found " +
                                           std::to_string(lines.size() - 1));
    for (std::size_t k = 1; k < lines.size(); ++k) {
      const Line& l = lines[k];
      if (l.tokens.size() != 3) parse_error(l.number, "expected 'i j value'");
      const long long i = to_integer(l.tokens[0], l.number);
      const long long j = to_integer(l.tokens[1], l.number);
      if (i < 1 || i > rows || j < 1 || j > cols) parse_error(l.number, "index out of range");
      m(i - 1, j - 1) += to_real(l.tokens[2], l.number);
    }
  } else {
    std::vector<std::pair<int, std::string>> values;
    for (std::size_t k = 1; k < lines.size(); ++k)
      for (const auto& tok : lines[k].tokens) values.emplace_back(lines[k].number, tok);
    if (static_cast<long long>(values.size()) != rows * cols)
      parse_error(lines.back().number, "expected " + std::to_string(rows * cols) + " values, found " +
                                           std::to_string(values.size()));
    std::size_t k = 0;
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i, ++k) m(i, j) = to_real(values[k].second, values[k].first);
  }
  require_valid(m);
  return m;
}

std::string serialize(const DenseMatrix& m) {
  std::ostringstream os;
  os << "%%MatrixMarket matrix array real general\n" << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) os << format_real(m(i, j)) << '\n';
  return os.str();
}

std::string serialize(const Instance& inst) {
  return std::visit([](const auto& x) { return serialize(x); }, inst);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sprad
