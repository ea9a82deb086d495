#include "vrel/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "vrel/error.hpp"

namespace vrel {
namespace {

void check_vertex(const SimpleGraph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw Error(Errc::kOutOfRange,
                "vertex " + std::to_string(v) + " not in [0, " + std::to_string(g.order()) + ")");
  }
}

void require_connected(const SimpleGraph& g, const char* what) {
  if (!is_connected(g)) throw Error(Errc::kDisconnected, std::string(what) + " needs a connected graph");
}

// Shortest-path counts from one source, computed layer by layer over the
// bitset rows.
struct PathCounts {
  std::vector<int> dist;
  std::vector<std::uint64_t> sigma;
};

PathCounts count_paths_from(const SimpleGraph& g, int s) {
  const int n = g.order();
  PathCounts pc{std::vector<int>(n, kInfiniteDistance), std::vector<std::uint64_t>(n, 0)};
  pc.dist[s] = 0;
  pc.sigma[s] = 1;
  VertexMask seen = vertex_bit(s);
  VertexMask frontier = seen;
  int level = 0;
  while (frontier != 0) {
    ++level;
    VertexMask next = 0;
    for_each_vertex(frontier, [&](int u) { next |= g.row(u); });
    next &= ~seen;
    for_each_vertex(next, [&](int v) {
      pc.dist[v] = level;
      std::uint64_t total = 0;
      for_each_vertex(g.row(v) & frontier, [&](int u) { total += pc.sigma[u]; });
      pc.sigma[v] = total;
    });
    seen |= next;
    frontier = next;
  }
  return pc;
}

// Unit-capacity max flow on the vertex-split network between s and t, stopped
// once it reaches `cap`.
int vertex_disjoint_paths(const SimpleGraph& g, int s, int t, int cap) {
  const int n = g.order();
  const int nodes = 2 * n;
  const int big = n + 1;
  std::vector<int> residual(static_cast<std::size_t>(nodes) * nodes, 0);
  auto at = [&](int a, int b) -> int& { return residual[static_cast<std::size_t>(a) * nodes + b]; };
  // v_in = 2v, v_out = 2v + 1
  for (int v = 0; v < n; ++v) {
    at(2 * v, 2 * v + 1) = (v == s || v == t) ? big : 1;
    for_each_vertex(g.row(v), [&](int w) { at(2 * v + 1, 2 * w) = big; });
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(nodes);
  while (flow < cap) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && parent[sink] < 0) {
      const int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < nodes; ++b) {
        if (parent[b] < 0 && at(a, b) > 0) {
          parent[b] = a;
          queue.push_back(b);
        }
      }
    }
    if (parent[sink] < 0) break;
    for (int b = sink; b != source; b = parent[b]) {
      --at(parent[b], b);
      ++at(b, parent[b]);
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int SimpleGraph::min_degree() const {
  int best = n_ == 0 ? 0 : kMaxVertices;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int SimpleGraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<EdgeInsertion> SimpleGraph::edges() const {
  std::vector<EdgeInsertion> out;
  out.reserve(m_);
  for (int i = 0; i < n_; ++i) {
    for_each_vertex(rows_[i] & ~full_mask(i + 1), [&](int j) { out.push_back({i, j}); });
  }
  return out;
}

std::vector<EdgeInsertion> SimpleGraph::non_edges() const {
  std::vector<EdgeInsertion> out;
  for (int i = 0; i < n_; ++i) {
    const VertexMask missing = ~rows_[i] & full_mask(n_) & ~full_mask(i + 1);
    for_each_vertex(missing, [&](int j) { out.push_back({i, j}); });
  }
  return out;
}

SimpleGraph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > kMaxVertices) {
    throw Error(Errc::kOutOfRange, "vertex count " + std::to_string(n) + " outside [1, 64]");
  }
  SimpleGraph g;
  g.n_ = n;
  g.rows_.assign(n, 0);
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw Error(Errc::kOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") has an index outside [0, " +
                      std::to_string(n) + ")");
    }
    if (a == b) throw Error(Errc::kSelfLoop, "self-loop at vertex " + std::to_string(a));
    if (g.adjacent(a, b)) {
      throw Error(Errc::kDuplicateEdge,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") listed twice");
    }
    g.rows_[a] |= vertex_bit(b);
    g.rows_[b] |= vertex_bit(a);
    ++g.m_;
  }
  return g;
}

EdgeInsertion make_insertion(const SimpleGraph& g, int a, int b) {
  check_vertex(g, a);
  check_vertex(g, b);
  if (a == b) throw Error(Errc::kSelfLoop, "insertion would create a self-loop");
  if (g.adjacent(a, b)) {
    throw Error(Errc::kEdgeExists, "edge (" + std::to_string(a) + "," + std::to_string(b) + ") already present");
  }
  return a < b ? EdgeInsertion{a, b} : EdgeInsertion{b, a};
}

SimpleGraph insert_edge(const SimpleGraph& g, EdgeInsertion e) {
  const EdgeInsertion ok = make_insertion(g, e.i, e.j);
  SimpleGraph y = g;
  y.rows_[ok.i] |= vertex_bit(ok.j);
  y.rows_[ok.j] |= vertex_bit(ok.i);
  ++y.m_;
  return y;
}

SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.size());
  for (const auto& e : g.edges()) edges.emplace_back(perm[e.i], perm[e.j]);
  return build_graph(g.order(), edges);
}

bool is_connected(const SimpleGraph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  VertexMask seen = vertex_bit(0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for_each_vertex(g.row(u) & ~seen, [&](int w) {
      seen |= vertex_bit(w);
      queue.push_back(w);
    });
  }
  return seen == g.all_vertices();
}

bool subset_connected(const SimpleGraph& g, VertexMask mask) {
  if (mask == 0) throw Error(Errc::kEmptyMask, "subset_connected on an empty vertex set");
  VertexMask reached = mask & (~mask + 1);
  VertexMask frontier = reached;
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](int u) { next |= g.row(u); });
    next &= mask & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == mask;
}

std::vector<int> distances_from(const SimpleGraph& g, int source) {
  check_vertex(g, source);
  std::vector<int> dist(g.order(), kInfiniteDistance);
  dist[source] = 0;
  VertexMask seen = vertex_bit(source);
  VertexMask frontier = seen;
  for (int level = 1; frontier != 0; ++level) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](int u) { next |= g.row(u); });
    next &= ~seen;
    for_each_vertex(next, [&](int v) { dist[v] = level; });
    seen |= next;
    frontier = next;
  }
  return dist;
}

int distance(const SimpleGraph& g, int i, int j) {
  check_vertex(g, j);
  return distances_from(g, i)[j];
}

std::vector<int> distance_matrix(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    const auto row = distances_from(g, s);
    std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(s) * n);
  }
  return out;
}

int diameter(const SimpleGraph& g) {
  require_connected(g, "diameter");
  const auto d = distance_matrix(g);
  return *std::max_element(d.begin(), d.end());
}

std::vector<Rational> betweenness_all(const SimpleGraph& g, BetweennessMode mode) {
  require_connected(g, "betweenness");
  const int n = g.order();
  std::vector<PathCounts> from;
  from.reserve(n);
  for (int s = 0; s < n; ++s) from.push_back(count_paths_from(g, s));

  std::vector<Rational> out(n);
  if (mode == BetweennessMode::kGlobalRatio) {
    std::uint64_t total = 0;
    for (int s = 0; s < n; ++s) {
      for (int t = s + 1; t < n; ++t) total += from[s].sigma[t];
    }
    for (int v = 0; v < n; ++v) {
      std::uint64_t through = 0;
      for (int s = 0; s < n; ++s) {
        if (s == v) continue;
        for (int t = s + 1; t < n; ++t) {
          if (t == v) continue;
          if (from[s].dist[v] + from[v].dist[t] == from[s].dist[t]) {
            through += from[s].sigma[v] * from[v].sigma[t];
          }
        }
      }
      out[v] = total == 0 ? Rational(0) : Rational(BigInt(through), BigInt(total));
    }
  } else {
    for (int v = 0; v < n; ++v) {
      Rational acc = 0;
      for (int s = 0; s < n; ++s) {
        if (s == v) continue;
        for (int t = s + 1; t < n; ++t) {
          if (t == v) continue;
          if (from[s].dist[v] + from[v].dist[t] == from[s].dist[t]) {
            acc += Rational(BigInt(from[s].sigma[v] * from[v].sigma[t]), BigInt(from[s].sigma[t]));
          }
        }
      }
      out[v] = acc;
    }
  }
  return out;
}

Rational betweenness(const SimpleGraph& g, int v, BetweennessMode mode) {
  check_vertex(g, v);
  return betweenness_all(g, mode)[v];
}

int vertex_connectivity(const SimpleGraph& g) {
  if (g.order() < 2) throw Error(Errc::kParameterRange, "vertex connectivity needs at least 2 vertices");
  require_connected(g, "vertex_connectivity");
  const int n = g.order();
  if (g.is_complete()) return n - 1;
  // Non-complete graphs have kappa <= min degree, so every flow can stop there.
  int best = g.min_degree();
  for (const auto& e : g.non_edges()) {
    if (best == 0) break;
    best = std::min(best, vertex_disjoint_paths(g, e.i, e.j, best));
  }
  return best;
}

}  // namespace vrel
