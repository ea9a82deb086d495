#include "vrel/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>

namespace vrel {
namespace {

// Replaces keys by their rank among the distinct keys. Ranks depend only on
// key values, so the result commutes with vertex relabeling.
template <typename Key>
int rank_colors(const std::vector<Key>& keys, std::vector<int>& color) {
  std::vector<Key> distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), keys[v]) - distinct.begin());
  }
  return static_cast<int>(distinct.size());
}

int count_cells(const std::vector<int>& color) {
  return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
}

// 1-dimensional Weisfeiler-Leman refinement to the coarsest equitable
// partition finer than `color`.
void refine(const SimpleGraph& g, std::vector<int>& color) {
  const int n = g.order();
  int cells = count_cells(color);
  std::vector<std::vector<int>> signature(n);
  while (cells < n) {
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.clear();
      sig.push_back(color[v]);
      for_each_vertex(g.row(v), [&](int w) { sig.push_back(color[w]); });
      std::sort(sig.begin() + 1, sig.end());
    }
    const int next = rank_colors(signature, color);
    if (next == cells) break;
    cells = next;
  }
}

std::string encode(const SimpleGraph& g, const std::vector<int>& color) {
  const int n = g.order();
  std::vector<int> vertex_at(n);
  for (int v = 0; v < n; ++v) vertex_at[color[v]] = v;
  std::string out;
  out.push_back(static_cast<char>(n));
  unsigned char acc = 0;
  int used = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      acc = static_cast<unsigned char>((acc << 1) | (g.adjacent(vertex_at[a], vertex_at[b]) ? 1 : 0));
      if (++used == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(acc << (8 - used)));
  return out;
}

bool twins(const SimpleGraph& g, int u, int v) {
  return (g.row(u) & ~vertex_bit(v)) == (g.row(v) & ~vertex_bit(u));
}

void search(const SimpleGraph& g, std::vector<int> color, std::optional<std::string>& best) {
  refine(g, color);
  const int n = g.order();
  const int cells = count_cells(color);
  if (cells == n) {
    std::string key = encode(g, color);
    if (!best || key < *best) best = std::move(key);
    return;
  }
  // Target: the non-singleton cell with the smallest colour.
  std::vector<int> size(cells, 0);
  for (int c : color) ++size[c];
  int target = 0;
  while (size[target] < 2) ++target;

  std::vector<int> tried;
  std::vector<int> keys(n);
  std::vector<int> child(n);
  for (int v = 0; v < n; ++v) {
    if (color[v] != target) continue;
    // Swapping twins in one cell is an automorphism that fixes the partition,
    // so their subtrees give the same leaves.
    if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g, u, v); })) continue;
    tried.push_back(v);
    for (int u = 0; u < n; ++u) keys[u] = 2 * color[u] + (color[u] == target && u != v ? 1 : 0);
    rank_colors(keys, child);
    search(g, child, best);
  }
}

}  // namespace

std::string canonical_key(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<int> color(n);
  rank_colors(degree, color);
  std::optional<std::string> best;
  search(g, color, best);
  return best.value_or(std::string(1, static_cast<char>(n)));
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::uint64_t invariant_hash(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> degrees(n);
  for (int v = 0; v < n; ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end());
  auto dist = distance_matrix(g);
  std::sort(dist.begin(), dist.end());

  std::string bytes;
  auto put = [&](int x) { bytes.append(reinterpret_cast<const char*>(&x), sizeof x); };
  put(n);
  put(g.size());
  for (int d : degrees) put(d);
  for (int d : dist) put(d);
  return fnv1a64(bytes);
}

bool IsomorphismFilter::admit(const SimpleGraph& g) { return admit(g, nullptr); }

bool IsomorphismFilter::admit(const SimpleGraph& g, std::string* key_out) {
  auto& bucket = buckets_[invariant_hash(g)];
  std::string key = canonical_key(g);
  if (std::find(bucket.begin(), bucket.end(), key) != bucket.end()) return false;
  if (key_out != nullptr) *key_out = key;
  bucket.push_back(std::move(key));
  ++count_;
  return true;
}

}  // namespace vrel
