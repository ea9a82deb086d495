#pragma once

#include <cstddef>
#include <span>

#include "vrel/rational.hpp"

namespace vrel {

enum class WilcoxonMode {
  kAuto,    // exact below kWilcoxonExactBelow nonzero differences, else normal
  kExact,   // full enumeration of sign assignments
  kNormal,  // tie-corrected normal approximation with continuity correction
};

inline constexpr std::size_t kWilcoxonExactBelow = 10;

struct WilcoxonResult {
  std::size_t nonzero = 0;  // N after dropping zero differences
  double w_plus = 0.0;      // sum of ranks of positive differences
  double t_star = 0.0;      // standardized statistic Z
  double p_value = 1.0;     // one-sided, H1: median(x - y) > 0
  double effect_r = 0.0;    // |Z| / sqrt(N)
  bool exact = false;
};

// Signed-rank test on d = x - y. Zero differences are dropped, tied |d| get
// average ranks.
WilcoxonResult wilcoxon_one_sided(std::span<const double> x, std::span<const double> y,
                                  WilcoxonMode mode = WilcoxonMode::kAuto);
// Same test with exact differences, so ties are never split by rounding.
WilcoxonResult wilcoxon_one_sided(std::span<const Rational> x, std::span<const Rational> y,
                                  WilcoxonMode mode = WilcoxonMode::kAuto);

inline double bonferroni(double p, int comparisons) {
  const double adjusted = p * comparisons;
  return adjusted > 1.0 ? 1.0 : adjusted;
}

}  // namespace vrel
