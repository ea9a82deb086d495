#pragma once

// Test-side graph builders and brute-force oracles. Nothing here calls the
// library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "vrel/graph.hpp"

namespace vrel::testing {

inline SimpleGraph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return build_graph(n, e);
}

inline SimpleGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return build_graph(n, e);
}

inline SimpleGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return build_graph(n, e);
}

// Center 0, leaves 1..k.
inline SimpleGraph star_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v <= k; ++v) e.emplace_back(0, v);
  return build_graph(k + 1, e);
}

inline SimpleGraph petersen_graph() {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < 5; ++v) {
    e.emplace_back(v, (v + 1) % 5);
    e.emplace_back(v, v + 5);
    e.emplace_back(5 + v, 5 + (v + 2) % 5);
  }
  return build_graph(10, e);
}

// Random spanning tree (random attachment) plus each other pair with
// probability `extra`. Always connected.
inline SimpleGraph random_connected(std::mt19937_64& rng, int n, double extra) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int k = 1; k < n; ++k) {
    const int parent = order[std::uniform_int_distribution<int>(0, k - 1)(rng)];
    adj[order[k]][parent] = adj[parent][order[k]] = true;
  }
  std::bernoulli_distribution coin(extra);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (adj[i][j] || coin(rng)) e.emplace_back(i, j);
    }
  }
  return build_graph(n, e);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Connectivity of the subgraph induced by `mask`, by union-find over the
// edge list.
inline bool uf_connected(const SimpleGraph& g, std::uint64_t mask) {
  const int n = g.order();
  UnionFind uf(n);
  for (const auto& e : g.edges()) {
    if (((mask >> e.i) & 1U) && ((mask >> e.j) & 1U)) uf.unite(e.i, e.j);
  }
  int root = -1;
  for (int v = 0; v < n; ++v) {
    if (!((mask >> v) & 1U)) continue;
    if (root < 0) root = uf.find(v);
    else if (uf.find(v) != root) return false;
  }
  return root >= 0;
}

// counts[r - 1] = number of connected induced r-subsets.
inline std::vector<std::uint64_t> brute_profile(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> counts(n, 0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (uf_connected(g, mask)) ++counts[__builtin_popcountll(mask) - 1];
  }
  return counts;
}

inline std::uint64_t binomial(int n, int r) {
  std::uint64_t c = 1;
  for (int k = 1; k <= r; ++k) c = c * (n - r + k) / k;
  return c;
}

// Floyd-Warshall, large value for unreachable.
inline std::vector<std::vector<int>> floyd(const SimpleGraph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j) {
      if (g.adjacent(i, j)) d[i][j] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

// Every shortest s-t path, vertex sequences, by depth-first enumeration.
inline void shortest_paths(const SimpleGraph& g, const std::vector<std::vector<int>>& d, int s, int t,
                           std::vector<int>& stack, std::vector<std::vector<int>>& out) {
  stack.push_back(s);
  if (s == t) {
    out.push_back(stack);
  } else {
    for (int w = 0; w < g.order(); ++w) {
      if (g.adjacent(s, w) && d[w][t] == d[s][t] - 1) shortest_paths(g, d, w, t, stack, out);
    }
  }
  stack.pop_back();
}

// Smallest vertex set whose removal disconnects g or leaves one vertex.
inline int brute_connectivity(const SimpleGraph& g) {
  const int n = g.order();
  if (2 * g.size() == n * (n - 1)) return n - 1;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (int k = 0; k < n - 1; ++k) {
    for (std::uint64_t removed = 0; removed <= all; ++removed) {
      if (__builtin_popcountll(removed) != k) continue;
      if (!uf_connected(g, all & ~removed)) return k;
    }
  }
  return n - 1;
}

}  // namespace vrel::testing
