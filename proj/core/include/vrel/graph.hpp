#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "vrel/rational.hpp"

namespace vrel {

// One bit per vertex; bit v is vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

constexpr VertexMask vertex_bit(int v) { return VertexMask{1} << v; }

constexpr VertexMask full_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

// Visits every set bit of `mask` in ascending order.
template <typename Fn>
void for_each_vertex(VertexMask mask, Fn&& fn) {
  while (mask != 0) {
    fn(std::countr_zero(mask));
    mask &= mask - 1;
  }
}

// An unordered vertex pair {i, j} stored with i < j.
struct EdgeInsertion {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const EdgeInsertion&, const EdgeInsertion&) = default;
};

// Undirected simple graph on at most 64 vertices, one adjacency bitset per
// vertex. Values are immutable once built.
class SimpleGraph {
 public:
  int order() const { return n_; }
  int size() const { return m_; }

  VertexMask row(int v) const { return rows_[v]; }
  std::span<const VertexMask> rows() const { return rows_; }
  VertexMask all_vertices() const { return full_mask(n_); }

  bool adjacent(int i, int j) const { return (rows_[i] >> j) & 1U; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  int min_degree() const;
  int max_degree() const;
  bool is_complete() const { return 2 * m_ == n_ * (n_ - 1); }

  // Lexicographically sorted, i < j in every pair.
  std::vector<EdgeInsertion> edges() const;
  std::vector<EdgeInsertion> non_edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  friend SimpleGraph build_graph(int n, const std::vector<std::pair<int, int>>& edges);
  friend SimpleGraph insert_edge(const SimpleGraph& g, EdgeInsertion e);

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexMask> rows_;
};

// Rejects out-of-range indices, self-loops and duplicate pairs with distinct
// error codes.
SimpleGraph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Validates and normalizes a candidate insertion for `g` (orders the pair).
EdgeInsertion make_insertion(const SimpleGraph& g, int a, int b);

SimpleGraph insert_edge(const SimpleGraph& g, EdgeInsertion e);

// perm[v] is the new label of vertex v.
SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm);

bool is_connected(const SimpleGraph& g);
bool subset_connected(const SimpleGraph& g, VertexMask mask);

int distance(const SimpleGraph& g, int i, int j);
std::vector<int> distances_from(const SimpleGraph& g, int source);
// Row-major n x n, kInfiniteDistance for unreachable pairs.
std::vector<int> distance_matrix(const SimpleGraph& g);
int diameter(const SimpleGraph& g);

enum class BetweennessMode {
  // Interior shortest paths through v over the total number of shortest
  // paths between all distinct pairs.
  kGlobalRatio,
  // Classical sum over pairs of sigma_st(v) / sigma_st.
  kPerPair,
};

Rational betweenness(const SimpleGraph& g, int v,
                     BetweennessMode mode = BetweennessMode::kGlobalRatio);
std::vector<Rational> betweenness_all(const SimpleGraph& g,
                                      BetweennessMode mode = BetweennessMode::kGlobalRatio);

int vertex_connectivity(const SimpleGraph& g);

}  // namespace vrel
