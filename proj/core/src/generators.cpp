#include "vrel/generators.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "vrel/canonical.hpp"
#include "vrel/error.hpp"

namespace vrel {
namespace {

SimpleGraph from_rows(int n, const std::vector<VertexMask>& rows) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for_each_vertex(rows[i] & ~full_mask(i + 1), [&](int j) { edges.emplace_back(i, j); });
  }
  return build_graph(n, edges);
}

int nth_vertex(VertexMask mask, std::uint64_t k) {
  for (; k > 0; --k) mask &= mask - 1;
  return std::countr_zero(mask);
}

constexpr GraphModel kModels[] = {GraphModel::kErdosRenyi, GraphModel::kBarabasiAlbert, GraphModel::kWattsStrogatz};

}  // namespace

std::string_view model_name(GraphModel model) {
  switch (model) {
    case GraphModel::kErdosRenyi: return "er";
    case GraphModel::kBarabasiAlbert: return "ba";
    case GraphModel::kWattsStrogatz: return "ws";
  }
  return "unknown";
}

std::optional<GraphModel> parse_model(std::string_view name) {
  for (auto m : kModels) {
    if (model_name(m) == name) return m;
  }
  return std::nullopt;
}

SimpleGraph gen_er(int n, double p, Rng& rng) {
  if (n < 2 || n > kMaxVertices || !(p >= 0.0 && p <= 1.0)) {
    throw Error(Errc::kParameterRange, "gen_er needs 2 <= n <= 64 and p in [0, 1]");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (uniform_unit(rng) < p) edges.emplace_back(i, j);
    }
  }
  return build_graph(n, edges);
}

SimpleGraph gen_ba(int n, int m_attach, Rng& rng) {
  if (m_attach < 2 || m_attach >= n || n > kMaxVertices) {
    throw Error(Errc::kParameterRange, "gen_ba needs 2 <= m_attach < n <= 64");
  }
  std::vector<std::pair<int, int>> edges;
  // Each vertex appears once per incident edge end, so a uniform draw from
  // this list is degree-proportional.
  std::vector<int> ends;
  for (int i = 0; i < m_attach; ++i) {
    for (int j = i + 1; j < m_attach; ++j) {
      edges.emplace_back(i, j);
      ends.push_back(i);
      ends.push_back(j);
    }
  }
  for (int v = m_attach; v < n; ++v) {
    VertexMask chosen = 0;
    std::vector<int> targets;
    while (static_cast<int>(targets.size()) < m_attach) {
      const int t = ends[uniform_index(rng, ends.size())];
      if (chosen & vertex_bit(t)) continue;
      chosen |= vertex_bit(t);
      targets.push_back(t);
    }
    for (int t : targets) {
      edges.emplace_back(t, v);
      ends.push_back(t);
      ends.push_back(v);
    }
  }
  return build_graph(n, edges);
}

SimpleGraph gen_ws(int n, int k, double beta, Rng& rng) {
  if (k < 2 || k % 2 != 0 || k >= n || n > kMaxVertices || !(beta >= 0.0 && beta <= 1.0)) {
    throw Error(Errc::kParameterRange, "gen_ws needs even 2 <= k < n <= 64 and beta in [0, 1]");
  }
  std::vector<VertexMask> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= k / 2; ++j) {
      const int w = (i + j) % n;
      rows[i] |= vertex_bit(w);
      rows[w] |= vertex_bit(i);
    }
  }
  const VertexMask all = full_mask(n);
  for (int j = 1; j <= k / 2; ++j) {
    for (int u = 0; u < n; ++u) {
      if (uniform_unit(rng) >= beta) continue;
      const int v = (u + j) % n;
      const VertexMask options = all & ~rows[u] & ~vertex_bit(u);
      // The lattice edge may already have been rewired away.
      if (options == 0 || !(rows[u] & vertex_bit(v))) continue;
      const int w = nth_vertex(options, uniform_index(rng, std::popcount(options)));
      rows[u] &= ~vertex_bit(v);
      rows[v] &= ~vertex_bit(u);
      rows[u] |= vertex_bit(w);
      rows[w] |= vertex_bit(u);
    }
  }
  return from_rows(n, rows);
}

void DatasetSpec::validate() const {
  auto fail = [](const std::string& what) { throw Error(Errc::kParameterRange, what); };
  if (orders.empty()) fail("at least one order is required");
  if (er_count < 0 || ba_count < 0 || ws_count < 0) fail("quotas must be >= 0");
  // p = 0 passes so that the stalled-quota diagnostics are reachable.
  if (!(er_p >= 0.0 && er_p <= 1.0)) fail("er_p must lie in [0, 1]");
  if (ba_m < 2) fail("ba_m must be >= 2");
  if (ws_k < 2 || ws_k % 2 != 0) fail("ws_k must be even and >= 2");
  if (!(ws_beta >= 0.0 && ws_beta <= 1.0)) fail("ws_beta must lie in [0, 1]");
  if (max_attempts == 0) fail("max_attempts must be positive");
  for (int n : orders) {
    if (n < 2 || n > kMaxVertices) fail("order " + std::to_string(n) + " outside [2, 64]");
    if (ba_count > 0 && ba_m >= n) fail("ba_m must be < n for every order");
    if (ws_count > 0 && ws_k >= n) fail("ws_k must be < n for every order");
  }
}

std::uint64_t attempt_seed(std::uint64_t master_seed, GraphModel model, int order, std::uint64_t attempt) {
  return derive_seed({master_seed, static_cast<std::uint64_t>(model) + 1, static_cast<std::uint64_t>(order), attempt});
}

Dataset build_dataset(const DatasetSpec& spec) {
  spec.validate();
  Dataset out{spec, {}, {}};
  IsomorphismFilter filter;
  for (int n : spec.orders) {
    for (GraphModel model : kModels) {
      const int quota = model == GraphModel::kErdosRenyi     ? spec.er_count
                        : model == GraphModel::kBarabasiAlbert ? spec.ba_count
                                                               : spec.ws_count;
      CellStats cell{model, n};
      std::uint64_t since_accept = 0;
      while (cell.accepted < static_cast<std::uint64_t>(quota)) {
        if (since_accept == spec.max_attempts) {
          std::ostringstream msg;
          msg << model_name(model) << " n=" << n << ": accepted " << cell.accepted << "/" << quota << " after "
              << cell.attempts << " attempts (acceptance rate "
              << static_cast<double>(cell.accepted) / static_cast<double>(cell.attempts) << "; rejected "
              << cell.rejected_disconnected << " disconnected, " << cell.rejected_pendant << " pendant, "
              << cell.rejected_isomorphic << " isomorphic)";
          throw Error(Errc::kQuotaFailure, msg.str());
        }
        const std::uint64_t attempt = cell.attempts++;
        ++since_accept;
        const std::uint64_t seed = attempt_seed(spec.master_seed, model, n, attempt);
        Rng rng(seed);
        SimpleGraph g = model == GraphModel::kErdosRenyi     ? gen_er(n, spec.er_p, rng)
                        : model == GraphModel::kBarabasiAlbert ? gen_ba(n, spec.ba_m, rng)
                                                               : gen_ws(n, spec.ws_k, spec.ws_beta, rng);
        if (!is_connected(g)) {
          ++cell.rejected_disconnected;
          continue;
        }
        if (g.min_degree() < 2) {
          ++cell.rejected_pendant;
          continue;
        }
        std::string key;
        if (!filter.admit(g, &key)) {
          ++cell.rejected_isomorphic;
          continue;
        }
        ++cell.accepted;
        since_accept = 0;
        char id[64];
        std::snprintf(id, sizeof id, "n%02d-%s-%04llu", n, std::string(model_name(model)).c_str(),
                      static_cast<unsigned long long>(cell.accepted));
        out.graphs.push_back({{id, std::string(model_name(model)), std::move(g)}, seed, attempt, std::move(key)});
      }
      out.cells.push_back(cell);
    }
  }
  return out;
}

}  // namespace vrel
