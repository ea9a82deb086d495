#include "vrel/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "vrel/error.hpp"

namespace vrel {
namespace {

double magnitude(double v) { return std::abs(v); }
Rational magnitude(const Rational& v) { return boost::multiprecision::abs(v); }

template <typename T>
WilcoxonResult signed_rank(std::span<const T> x, std::span<const T> y, WilcoxonMode mode) {
  if (x.size() != y.size()) throw Error(Errc::kParameterRange, "paired samples must have equal length");
  std::vector<T> diffs;
  for (std::size_t k = 0; k < x.size(); ++k) {
    T d = x[k] - y[k];
    if (d != 0) diffs.push_back(std::move(d));
  }
  WilcoxonResult out;
  const std::size_t n = diffs.size();
  out.nonzero = n;
  if (n == 0) return out;

  std::vector<T> mags;
  mags.reserve(n);
  for (const auto& d : diffs) mags.push_back(magnitude(d));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return mags[a] < mags[b]; });

  // Twice the average rank, so tied ranks stay integral.
  std::vector<long long> rank2(n);
  double tie_term = 0.0;
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo;
    while (hi + 1 < n && mags[order[hi + 1]] == mags[order[lo]]) ++hi;
    for (std::size_t k = lo; k <= hi; ++k) rank2[order[k]] = static_cast<long long>(lo + 1 + hi + 1);
    const double t = static_cast<double>(hi - lo + 1);
    tie_term += t * t * t - t;
    lo = hi + 1;
  }
  long long w2_plus = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (diffs[k] > 0) w2_plus += rank2[k];
  }
  out.w_plus = static_cast<double>(w2_plus) / 2.0;

  const double nn = static_cast<double>(n);
  const double mean = nn * (nn + 1.0) / 4.0;
  const double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0 - tie_term / 48.0;
  out.t_star = var > 0.0 ? (out.w_plus - mean - 0.5) / std::sqrt(var) : 0.0;
  out.effect_r = std::abs(out.t_star) / std::sqrt(nn);

  out.exact = mode == WilcoxonMode::kExact || (mode == WilcoxonMode::kAuto && n < kWilcoxonExactBelow);
  if (out.exact) {
    // Null distribution of the doubled statistic over all 2^n sign patterns.
    const long long total = std::accumulate(rank2.begin(), rank2.end(), 0LL);
    std::vector<long double> ways(static_cast<std::size_t>(total) + 1, 0.0L);
    ways[0] = 1.0L;
    long long reach = 0;
    for (long long r : rank2) {
      for (long long s = reach; s >= 0; --s) ways[s + r] += ways[s];
      reach += r;
    }
    long double tail = 0.0L;
    for (long long s = w2_plus; s <= total; ++s) tail += ways[s];
    out.p_value = static_cast<double>(tail / std::ldexp(1.0L, static_cast<int>(n)));
  } else {
    out.p_value = 0.5 * std::erfc(out.t_star / std::sqrt(2.0));
  }
  return out;
}

}  // namespace

WilcoxonResult wilcoxon_one_sided(std::span<const double> x, std::span<const double> y, WilcoxonMode mode) {
  return signed_rank(x, y, mode);
}

WilcoxonResult wilcoxon_one_sided(std::span<const Rational> x, std::span<const Rational> y, WilcoxonMode mode) {
  return signed_rank(x, y, mode);
}

}  // namespace vrel
