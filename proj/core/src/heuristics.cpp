#include "vrel/heuristics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "vrel/error.hpp"
#include "vrel/random.hpp"
#include "vrel/spectral.hpp"

namespace vrel {
namespace {

constexpr std::array kOperational = {HeuristicId::kAlpha, HeuristicId::kBeta,  HeuristicId::kGamma, HeuristicId::kDelta,
                                     HeuristicId::kPhi,   HeuristicId::kRandom, HeuristicId::kPhiCap};
constexpr std::array kBasic = {HeuristicId::kAlpha, HeuristicId::kBeta, HeuristicId::kGamma,
                               HeuristicId::kDelta, HeuristicId::kPhi,  HeuristicId::kRandom};

std::vector<EdgeInsertion> insertions_or_throw(const SimpleGraph& g) {
  if (!is_connected(g)) throw Error(Errc::kDisconnected, "heuristics need a connected graph");
  auto out = g.non_edges();
  if (out.empty()) throw Error(Errc::kNoInsertion, "graph is complete; no insertion possible");
  return out;
}

double alpha_after(const DenseMatrix& base, EdgeInsertion e) {
  DenseMatrix l = base;
  l(e.i, e.i) += 1.0;
  l(e.j, e.j) += 1.0;
  l(e.i, e.j) = l(e.j, e.i) = -1.0;
  return symmetric_eigenvalues(l)[1];
}

// Keeps every candidate whose value is within tol(best) of the maximum.
template <typename Tol>
HeuristicResult keep_maxima(HeuristicId id, const std::vector<EdgeInsertion>& edges, const std::vector<double>& value,
                            Tol tol) {
  const double best = *std::max_element(value.begin(), value.end());
  HeuristicResult out{id, {}};
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (best - value[k] <= tol(best)) out.candidates.push_back({edges[k], {value[k]}});
  }
  return out;
}

double alpha_tolerance(double best) { return kTieTolerance * std::max(1.0, std::abs(best)); }

template <typename T>
std::pair<T, T> sorted_pair(const T& a, const T& b) {
  return a < b ? std::pair<T, T>{a, b} : std::pair<T, T>{b, a};
}

}  // namespace

std::string_view heuristic_name(HeuristicId id) {
  switch (id) {
    case HeuristicId::kAlpha: return "alpha";
    case HeuristicId::kPhi: return "phi";
    case HeuristicId::kPhiCap: return "phi-cap";
    case HeuristicId::kBeta: return "beta";
    case HeuristicId::kGamma: return "gamma";
    case HeuristicId::kDelta: return "delta";
    case HeuristicId::kRandom: return "random";
    case HeuristicId::kBPostHoc: return "b-posthoc";
    case HeuristicId::kGammaPostHoc: return "gamma-posthoc";
  }
  return "unknown";
}

std::optional<HeuristicId> parse_heuristic(std::string_view name) {
  for (auto id : {HeuristicId::kAlpha, HeuristicId::kPhi, HeuristicId::kPhiCap, HeuristicId::kBeta, HeuristicId::kGamma,
                  HeuristicId::kDelta, HeuristicId::kRandom, HeuristicId::kBPostHoc, HeuristicId::kGammaPostHoc}) {
    if (heuristic_name(id) == name) return id;
  }
  return std::nullopt;
}

std::span<const HeuristicId> operational_heuristics() { return kOperational; }
std::span<const HeuristicId> basic_heuristics() { return kBasic; }

bool is_basic(HeuristicId id) { return std::find(kBasic.begin(), kBasic.end(), id) != kBasic.end(); }

std::vector<EdgeInsertion> HeuristicResult::edges() const {
  std::vector<EdgeInsertion> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) out.push_back(c.edge);
  return out;
}

HeuristicResult heuristic_alpha(const SimpleGraph& g) {
  const auto edges = insertions_or_throw(g);
  const DenseMatrix base = laplacian(g);
  std::vector<double> value(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) value[k] = alpha_after(base, edges[k]);
  return keep_maxima(HeuristicId::kAlpha, edges, value, alpha_tolerance);
}

HeuristicResult heuristic_phi(const SimpleGraph& g) {
  const auto edges = insertions_or_throw(g);
  const SpectralData sd = spectral_data(g);
  std::vector<double> value(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) value[k] = fiedler_distance(sd, edges[k].i, edges[k].j);
  return keep_maxima(HeuristicId::kPhi, edges, value, [](double) { return kTieTolerance; });
}

HeuristicResult heuristic_Phi(const SimpleGraph& g) {
  const HeuristicResult phi = heuristic_phi(g);
  const DenseMatrix base = laplacian(g);
  std::vector<double> alpha(phi.candidates.size());
  for (std::size_t k = 0; k < alpha.size(); ++k) alpha[k] = alpha_after(base, phi.candidates[k].edge);
  const double best = *std::max_element(alpha.begin(), alpha.end());
  // Candidates are in lexicographic order, so the first near-maximum wins
  // residual ties.
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (best - alpha[k] <= alpha_tolerance(best)) {
      Candidate pick = phi.candidates[k];
      pick.criteria.push_back(alpha[k]);
      return {HeuristicId::kPhiCap, {pick}};
    }
  }
  throw Error(Errc::kNoInsertion, "phi-cap found no candidate");
}

HeuristicResult heuristic_beta(const SimpleGraph& g, BetweennessMode mode) {
  const auto edges = insertions_or_throw(g);
  const auto btw = betweenness_all(g, mode);
  std::vector<std::pair<Rational, Rational>> keys;
  keys.reserve(edges.size());
  for (const auto& e : edges) keys.push_back(sorted_pair(btw[e.i], btw[e.j]));
  const auto best = *std::min_element(keys.begin(), keys.end());
  HeuristicResult out{HeuristicId::kBeta, {}};
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (keys[k] == best) out.candidates.push_back({edges[k], {keys[k].first, keys[k].second}});
  }
  return out;
}

HeuristicResult heuristic_gamma(const SimpleGraph& g) {
  const auto edges = insertions_or_throw(g);
  std::vector<std::pair<int, int>> keys;
  keys.reserve(edges.size());
  for (const auto& e : edges) keys.push_back(sorted_pair(g.degree(e.i), g.degree(e.j)));
  const auto best = *std::min_element(keys.begin(), keys.end());
  HeuristicResult out{HeuristicId::kGamma, {}};
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (keys[k] == best) {
      out.candidates.push_back({edges[k], {Rational(keys[k].first), Rational(keys[k].second)}});
    }
  }
  return out;
}

HeuristicResult heuristic_delta(const SimpleGraph& g) {
  insertions_or_throw(g);
  const int n = g.order();
  // Walk degree tiers from the top until some hub has a non-neighbour.
  std::vector<int> tiers;
  for (int v = 0; v < n; ++v) tiers.push_back(g.degree(v));
  std::sort(tiers.begin(), tiers.end(), std::greater<>());
  tiers.erase(std::unique(tiers.begin(), tiers.end()), tiers.end());

  for (int tier : tiers) {
    std::map<EdgeInsertion, int> pairs;
    int farthest = 0;
    for (int u = 0; u < n; ++u) {
      if (g.degree(u) != tier) continue;
      const auto dist = distances_from(g, u);
      const VertexMask others = g.all_vertices() & ~g.row(u) & ~vertex_bit(u);
      for_each_vertex(others, [&](int w) {
        farthest = std::max(farthest, dist[w]);
        pairs[u < w ? EdgeInsertion{u, w} : EdgeInsertion{w, u}] = dist[w];
      });
    }
    if (pairs.empty()) continue;
    HeuristicResult out{HeuristicId::kDelta, {}};
    for (const auto& [e, d] : pairs) {
      if (d == farthest) out.candidates.push_back({e, {Rational(tier), Rational(d)}});
    }
    return out;
  }
  throw Error(Errc::kNoInsertion, "delta found no candidate");
}

HeuristicResult heuristic_random(const SimpleGraph& g, std::uint64_t seed) {
  const auto edges = insertions_or_throw(g);
  Rng rng(seed);
  const auto pick = uniform_index(rng, edges.size());
  return {HeuristicId::kRandom, {{edges[pick], {}}}};
}

HeuristicResult derive_post_hoc(const HeuristicResult& base, const std::map<EdgeInsertion, Rational>& scores) {
  HeuristicId id;
  if (base.id == HeuristicId::kBeta) {
    id = HeuristicId::kBPostHoc;
  } else if (base.id == HeuristicId::kGamma) {
    id = HeuristicId::kGammaPostHoc;
  } else {
    throw Error(Errc::kParameterRange,
                "post-hoc selection is defined for beta and gamma, not " + std::string(heuristic_name(base.id)));
  }
  if (base.candidates.empty()) throw Error(Errc::kEmptyInput, "base heuristic has no candidates");
  const Candidate* best = nullptr;
  const Rational* best_score = nullptr;
  for (const auto& c : base.candidates) {
    const auto it = scores.find(c.edge);
    if (it == scores.end()) {
      throw Error(Errc::kMissingScore,
                  "no score for insertion (" + std::to_string(c.edge.i) + "," + std::to_string(c.edge.j) + ")");
    }
    if (best == nullptr || it->second > *best_score || (it->second == *best_score && c.edge < best->edge)) {
      best = &c;
      best_score = &it->second;
    }
  }
  return {id, {{best->edge, {*best_score}}}};
}

HeuristicResult apply_heuristic(HeuristicId id, const SimpleGraph& g, std::uint64_t seed) {
  switch (id) {
    case HeuristicId::kAlpha: return heuristic_alpha(g);
    case HeuristicId::kPhi: return heuristic_phi(g);
    case HeuristicId::kPhiCap: return heuristic_Phi(g);
    case HeuristicId::kBeta: return heuristic_beta(g);
    case HeuristicId::kGamma: return heuristic_gamma(g);
    case HeuristicId::kDelta: return heuristic_delta(g);
    case HeuristicId::kRandom: return heuristic_random(g, seed);
    case HeuristicId::kBPostHoc:
    case HeuristicId::kGammaPostHoc: break;
  }
  throw Error(Errc::kParameterRange, std::string(heuristic_name(id)) + " is post-hoc and needs supergraph scores");
}

}  // namespace vrel
