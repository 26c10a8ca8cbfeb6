#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "stareig/permutation.hpp"

namespace stareig {

// Structural data for the star graph S_n on Sym_n, where π is joined to
// π ∘ (1 i) for i = 2..n.
struct GraphStats {
  int n = 0;
  std::uint64_t order = 0;  // number of vertices, n!
  int degree = 0;           // n - 1
  bool is_bipartite = false;
  int girth = 0;
  int diameter = 0;
};

inline constexpr int kMaxAdjacencyN = 8;

// Neighbor lists indexed by lexicographic rank. Quadratic-in-n rank
// computations per edge are irrelevant at these sizes.
inline std::vector<std::vector<std::uint32_t>> adjacency_by_rank(int n) {
  if (n < 3 || n > kMaxAdjacencyN)
    throw std::out_of_range("adjacency_by_rank: n out of [3, " +
                            std::to_string(kMaxAdjacencyN) + "]: " + std::to_string(n));
  std::uint64_t total = factorial(n);
  std::vector<std::vector<std::uint32_t>> adj(total);
  std::vector<int> w;
  for (PermutationEnumerator e(n); !e.done(); e.advance()) {
    w = e.word();
    auto& row = adj[e.current_rank()];
    row.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 2; i <= n; ++i) {
      std::swap(w[0], w[static_cast<std::size_t>(i - 1)]);
      row.push_back(static_cast<std::uint32_t>(rank(Permutation(w))));
      std::swap(w[0], w[static_cast<std::size_t>(i - 1)]);
    }
  }
  return adj;
}

// BFS distances from the identity. Index = rank.
inline std::vector<int> distances_from_identity(int n) {
  auto adj = adjacency_by_rank(n);
  std::vector<int> dist(adj.size(), -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(adj.size());
  dist[0] = 0;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t u = queue[head];
    for (std::uint32_t v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

// Exhaustive statistics for 3 <= n <= 7. Eccentricity and shortest-cycle
// scans are run from the identity only; S_n is vertex-transitive, so that
// already gives the diameter and the girth.
inline GraphStats graph_stats(int n) {
  if (n < 3 || n > 7)
    throw std::out_of_range("graph_stats: n out of [3, 7]: " + std::to_string(n));
  auto adj = adjacency_by_rank(n);
  std::uint64_t total = factorial(n);

  std::vector<int> dist(total, -1);
  std::vector<std::int64_t> parent(total, -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(total);
  dist[0] = 0;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t u = queue[head];
    for (std::uint32_t v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        parent[v] = u;
        queue.push_back(v);
      }
  }
  if (queue.size() != total) throw std::logic_error("graph_stats: graph not connected");

  int diameter = 0;
  for (std::uint64_t v = 0; v < total; ++v)
    if (dist[v] > diameter) diameter = dist[v];

  bool bipartite = true;
  int shortest_cycle = 0;
  for (std::uint64_t u = 0; u < total; ++u) {
    for (std::uint32_t v : adj[u]) {
      if (v <= u) continue;
      if (((dist[u] ^ dist[v]) & 1) == 0) bipartite = false;
      if (parent[v] == static_cast<std::int64_t>(u) ||
          parent[u] == static_cast<std::int64_t>(v))
        continue;
      int len = dist[u] + dist[v] + 1;
      if (shortest_cycle == 0 || len < shortest_cycle) shortest_cycle = len;
    }
  }

  GraphStats s;
  s.n = n;
  s.order = total;
  s.degree = n - 1;
  s.is_bipartite = bipartite;
  s.girth = shortest_cycle;
  s.diameter = diameter;
  return s;
}

}  // namespace stareig
