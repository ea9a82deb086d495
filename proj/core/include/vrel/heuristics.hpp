#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "vrel/graph.hpp"
#include "vrel/rational.hpp"

namespace vrel {

enum class HeuristicId {
  kAlpha,
  kPhi,
  kPhiCap,
  kBeta,
  kGamma,
  kDelta,
  kRandom,
  kBPostHoc,
  kGammaPostHoc,
};

// Stable lowercase identifiers: "alpha", "phi", "phi-cap", "beta", "gamma",
// "delta", "random", "b-posthoc", "gamma-posthoc".
std::string_view heuristic_name(HeuristicId id);
std::optional<HeuristicId> parse_heuristic(std::string_view name);

// Heuristics that run directly on a graph, in report order.
std::span<const HeuristicId> operational_heuristics();
// Basic tie-set heuristics only.
std::span<const HeuristicId> basic_heuristics();
bool is_basic(HeuristicId id);

// Absolute tolerance for real-valued criteria; alpha scales it by max(1, |alpha|).
inline constexpr double kTieTolerance = 1e-9;

using Criterion = std::variant<double, Rational>;

struct Candidate {
  EdgeInsertion edge;
  // What the heuristic ranked by, e.g. {alpha(Y)} or {min degree, max degree}.
  std::vector<Criterion> criteria;
};

struct HeuristicResult {
  HeuristicId id = HeuristicId::kAlpha;
  std::vector<Candidate> candidates;  // sorted by edge

  std::vector<EdgeInsertion> edges() const;
};

HeuristicResult heuristic_alpha(const SimpleGraph& g);
HeuristicResult heuristic_phi(const SimpleGraph& g);
HeuristicResult heuristic_Phi(const SimpleGraph& g);
HeuristicResult heuristic_beta(const SimpleGraph& g, BetweennessMode mode = BetweennessMode::kGlobalRatio);
HeuristicResult heuristic_gamma(const SimpleGraph& g);
HeuristicResult heuristic_delta(const SimpleGraph& g);
HeuristicResult heuristic_random(const SimpleGraph& g, std::uint64_t seed);

// Single best-scoring candidate of `base` (exact comparison, lexicographic
// ties). beta yields b-posthoc, gamma yields gamma-posthoc.
HeuristicResult derive_post_hoc(const HeuristicResult& base, const std::map<EdgeInsertion, Rational>& scores);

// Dispatch for the operational heuristics; `seed` is used by random only.
HeuristicResult apply_heuristic(HeuristicId id, const SimpleGraph& g, std::uint64_t seed);

}  // namespace vrel
