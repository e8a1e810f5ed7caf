#include "sprad/graphs.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "sprad/error.hpp"

namespace sprad {

namespace {

void check_endpoint(int n, int v, std::size_t index) {
  if (v < 0 || v >= n)
    throw Error(Errc::InvariantViolation, "endpoint " + std::to_string(v) + " of edge " +
                                              std::to_string(index) + " is outside [0, " +
                                              std::to_string(n) + ")");
}

void check_order(int n) {
  if (n < 1) throw Error(Errc::InvariantViolation, "vertex count must be at least 1");
}

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

// Hop distances from `source`; -1 marks unreachable vertices.
std::vector<std::int64_t> bfs_distances(const detail::AdjacencyLists& adj, int source) {
  std::vector<std::int64_t> dist(adj.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

DistanceData all_pairs(const detail::AdjacencyLists& adj) {
  const auto n = static_cast<Eigen::Index>(adj.size());
  DistanceData out{IntMatrix::Zero(n, n), std::vector<std::int64_t>(adj.size(), 0)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto row = bfs_distances(adj, static_cast<int>(i));
    for (Eigen::Index j = 0; j < n; ++j) out.dist(i, j) = row[j];
    out.transmissions[i] = out.dist.row(i).sum();
  }
  return out;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_() {
  check_order(n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto& [u, v] = edges[k];
    check_endpoint(n, u, k);
    check_endpoint(n, v, k);
    if (u == v) throw Error(Errc::InvariantViolation, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw Error(Errc::InvariantViolation, "duplicate edge " + edge_text(*dup));
  edges_ = std::move(edges);
  adj_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(int u, int v) const {
  const auto& list = adj_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

Digraph::Digraph(int n, std::vector<Edge> arcs) : n_(n) {
  check_order(n);
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const auto& [u, v] = arcs[k];
    check_endpoint(n, u, k);
    check_endpoint(n, v, k);
    if (u == v) throw Error(Errc::InvariantViolation, "loop at vertex " + std::to_string(u));
  }
  std::sort(arcs.begin(), arcs.end());
  if (auto dup = std::adjacent_find(arcs.begin(), arcs.end()); dup != arcs.end())
    throw Error(Errc::InvariantViolation, "duplicate arc " + edge_text(*dup));
  arcs_ = std::move(arcs);
  out_.assign(static_cast<std::size_t>(n), {});
  in_.assign(static_cast<std::size_t>(n), {});
  // arcs_ is sorted, so out-lists come out ascending; in-lists need a sort.
  for (const auto& [u, v] : arcs_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

bool Digraph::has_arc(int u, int v) const {
  const auto& list = out_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[v] = static_cast<int>(g.neighbors(v).size());
  return d;
}

std::vector<int> out_degrees(const Digraph& d) {
  std::vector<int> out(static_cast<std::size_t>(d.order()));
  for (int v = 0; v < d.order(); ++v) out[v] = static_cast<int>(d.out_neighbors(v).size());
  return out;
}

std::vector<int> in_degrees(const Digraph& d) {
  std::vector<int> in(static_cast<std::size_t>(d.order()));
  for (int v = 0; v < d.order(); ++v) in[v] = static_cast<int>(d.in_neighbors(v).size());
  return in;
}

std::vector<std::int64_t> neighbor_degree_sums(const Graph& g) {
  const auto deg = degrees(g);
  std::vector<std::int64_t> sums(deg.size(), 0);
  for (int v = 0; v < g.order(); ++v)
    for (int u : g.neighbors(v)) sums[v] += deg[u];
  return sums;
}

std::vector<std::optional<double>> average_neighbor_degrees(const Graph& g) {
  const auto deg = degrees(g);
  const auto sums = neighbor_degree_sums(g);
  std::vector<std::optional<double>> m(deg.size());
  for (std::size_t v = 0; v < deg.size(); ++v)
    if (deg[v] > 0) m[v] = static_cast<double>(sums[v]) / deg[v];
  return m;
}

std::vector<std::int64_t> in_neighbor_outdegree_sums(const Digraph& d) {
  const auto out = out_degrees(d);
  std::vector<std::int64_t> sums(out.size(), 0);
  for (const auto& [u, v] : d.arcs()) sums[v] += out[u];
  return sums;
}

std::vector<std::optional<double>> average_out_neighbor_outdegrees(const Digraph& d) {
  const auto out = out_degrees(d);
  std::vector<std::optional<double>> m(out.size());
  for (int v = 0; v < d.order(); ++v) {
    if (out[v] == 0) continue;
    std::int64_t sum = 0;
    for (int u : d.out_neighbors(v)) sum += out[u];
    m[v] = static_cast<double>(sum) / out[v];
  }
  return m;
}

bool is_connected(const Graph& g) {
  return detail::all_true(detail::reachable_from(g.adjacency(), 0));
}

bool is_strongly_connected(const Digraph& d) {
  return detail::strongly_connected(d.out_adjacency());
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (int start = 0; start < g.order(); ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < g.order(); ++v) (color[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

DistanceData distance_matrix(const Graph& g) {
  if (!is_connected(g))
    throw Error(Errc::Disconnected, "distance matrix requires a connected graph");
  return all_pairs(g.adjacency());
}

DistanceData distance_matrix(const Digraph& d) {
  if (!is_strongly_connected(d))
    throw Error(Errc::NotStronglyConnected, "distance matrix requires a strongly connected digraph");
  return all_pairs(d.out_adjacency());
}

GraphClass classify(const Graph& g) {
  const auto deg = degrees(g);
  if (std::all_of(deg.begin(), deg.end(), [&](int d) { return d == deg.front(); }))
    return Regular{deg.front()};

  auto parts = is_bipartite(g);
  if (!parts || parts->first.empty() || parts->second.empty()) return OtherClass{};
  auto constant_degree = [&](const std::vector<int>& side) -> std::optional<int> {
    const int d0 = deg[side.front()];
    for (int v : side)
      if (deg[v] != d0) return std::nullopt;
    return d0;
  };
  auto r = constant_degree(parts->first);
  auto s = constant_degree(parts->second);
  if (!r || !s) return OtherClass{};
  if (*r < *s) {
    std::swap(parts->first, parts->second);
    std::swap(*r, *s);
  }
  return BipartiteSemiRegular{*r, *s, std::move(*parts)};
}

bool is_regular(const GraphClass& c) { return std::holds_alternative<Regular>(c); }

bool is_regular_or_semiregular(const GraphClass& c) {
  return !std::holds_alternative<OtherClass>(c);
}

std::string describe(const GraphClass& c) {
  std::ostringstream os;
  if (const auto* reg = std::get_if<Regular>(&c)) {
    os << "Regular(" << reg->degree << ")";
  } else if (const auto* bsr = std::get_if<BipartiteSemiRegular>(&c)) {
    os << "BipartiteSemiRegular(" << bsr->r << "," << bsr->s << ")";
  } else {
    os << "Other";
  }
  return os.str();
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, std::move(e));
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, std::move(e));
}

Digraph directed_cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Digraph(n, std::move(e));
}

Digraph complete_digraph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) e.emplace_back(i, j);
  return Digraph(n, std::move(e));
}

}  // namespace sprad
