#pragma once

#include <cstddef>
#include <deque>
#include <vector>

namespace sprad::detail {

using AdjacencyLists = std::vector<std::vector<int>>;

// Breadth-first visit from `source`, neighbors taken in stored order.
inline std::vector<bool> reachable_from(const AdjacencyLists& adj, int source) {
  std::vector<bool> seen(adj.size(), false);
  if (adj.empty()) return seen;
  std::deque<int> queue{source};
  seen[source] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

inline bool all_true(const std::vector<bool>& flags) {
  for (bool f : flags)
    if (!f) return false;
  return true;
}

inline AdjacencyLists reversed(const AdjacencyLists& adj) {
  AdjacencyLists rev(adj.size());
  for (std::size_t u = 0; u < adj.size(); ++u)
    for (int v : adj[u]) rev[v].push_back(static_cast<int>(u));
  return rev;
}

/// Strongly connected iff vertex 0 reaches everything forwards and backwards.
inline bool strongly_connected(const AdjacencyLists& adj) {
  if (adj.size() <= 1) return true;
  return all_true(reachable_from(adj, 0)) && all_true(reachable_from(reversed(adj), 0));
}

}  // namespace sprad::detail
