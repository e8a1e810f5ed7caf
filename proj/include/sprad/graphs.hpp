#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "sprad/detail/reachability.hpp"

namespace sprad {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
/// (u < v) and sorted; construction rejects loops, duplicates and
/// out-of-range endpoints with Errc::InvariantViolation.
class Graph {
 public:
  Graph() : Graph(1, {}) {}
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Neighbors in ascending order.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const detail::AdjacencyLists& adjacency() const { return adj_; }
  bool adjacent(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  detail::AdjacencyLists adj_;
};

/// Simple digraph on vertices 0..n-1; arcs (u, v) sorted, no loops or duplicates.
class Digraph {
 public:
  Digraph() : Digraph(1, {}) {}
  Digraph(int n, std::vector<Edge> arcs);

  int order() const { return n_; }
  std::size_t size() const { return arcs_.size(); }
  const std::vector<Edge>& arcs() const { return arcs_; }
  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
  const detail::AdjacencyLists& out_adjacency() const { return out_; }
  bool has_arc(int u, int v) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_;
  std::vector<Edge> arcs_;
  detail::AdjacencyLists out_;
  detail::AdjacencyLists in_;
};

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// All-pairs hop distances and their row sums (transmissions).
struct DistanceData {
  IntMatrix dist;
  std::vector<std::int64_t> transmissions;
};

struct Bipartition {
  std::vector<int> first;
  std::vector<int> second;
};

struct Regular {
  int degree;
  friend bool operator==(const Regular&, const Regular&) = default;
};
/// Bipartite with constant degree `r` on `parts.first` and `s` on
/// `parts.second`; the larger degree is listed first.
struct BipartiteSemiRegular {
  int r;
  int s;
  Bipartition parts;
};
struct OtherClass {};

using GraphClass = std::variant<Regular, BipartiteSemiRegular, OtherClass>;

std::string describe(const GraphClass& c);

std::vector<int> degrees(const Graph& g);
std::vector<int> out_degrees(const Digraph& d);
std::vector<int> in_degrees(const Digraph& d);

/// S_i = sum of neighbor degrees (the integer d_i * m_i); 0 for isolated vertices.
std::vector<std::int64_t> neighbor_degree_sums(const Graph& g);
/// Average neighbor degree m_i, empty for isolated vertices. Display only.
std::vector<std::optional<double>> average_neighbor_degrees(const Graph& g);
/// T_i = sum of out-degrees over the in-neighbors of i.
std::vector<std::int64_t> in_neighbor_outdegree_sums(const Digraph& d);
/// Average out-degree of the out-neighbors, empty when d_i^+ = 0. No bound
/// uses it; exposed for reports.
std::vector<std::optional<double>> average_out_neighbor_outdegrees(const Digraph& d);

bool is_connected(const Graph& g);
bool is_strongly_connected(const Digraph& d);

/// BFS two-coloring in ascending vertex order; empty when an odd cycle exists.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// Throws Errc::Disconnected / Errc::NotStronglyConnected.
DistanceData distance_matrix(const Graph& g);
DistanceData distance_matrix(const Digraph& d);

/// Regular, else bipartite semi-regular (using the BFS coloring, which is
/// the unique bipartition for connected graphs), else Other.
GraphClass classify(const Graph& g);

bool is_regular(const GraphClass& c);
bool is_regular_or_semiregular(const GraphClass& c);

// Named families used by tests, examples and the CLI.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite_graph(int a, int b);
Digraph directed_cycle(int n);
Digraph complete_digraph(int n);

}  // namespace sprad
