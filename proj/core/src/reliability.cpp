#include "vrel/reliability.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "vrel/error.hpp"

namespace vrel {
namespace {

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

SubsetClassification classify_subsets(const SimpleGraph& g) {
  const int n = g.order();
  if (n < 1 || n > kEnumerationBudget) {
    throw Error(Errc::kOverBudget,
                "subset enumeration limited to n <= " + std::to_string(kEnumerationBudget) + ", got " + std::to_string(n));
  }
  SubsetClassification cls;
  cls.n_ = n;
  const VertexMask end = VertexMask{1} << n;
  cls.flags_.assign((end + 63) / 64, 0);
  for (VertexMask mask = 1; mask < end; ++mask) {
    if (subset_connected(g, mask)) cls.flags_[mask >> 6] |= std::uint64_t{1} << (mask & 63);
  }
  return cls;
}

ReliabilityProfile count_connected(const SubsetClassification& cls) {
  const int n = cls.order();
  ReliabilityProfile prof{n, std::vector<std::uint64_t>(n, 0)};
  const VertexMask end = VertexMask{1} << n;
  for (VertexMask mask = 1; mask < end; ++mask) {
    if (cls.connected(mask)) ++prof.counts[std::popcount(mask) - 1];
  }
  return prof;
}

ReliabilityProfile reliability_profile(const SimpleGraph& g) { return count_connected(classify_subsets(g)); }

ReliabilityProfile recount_for_insertion(const SimpleGraph& g, const SubsetClassification& cls, EdgeInsertion e) {
  const int n = g.order();
  if (cls.order() != n) {
    throw Error(Errc::kStaleClassification, "classification built for n=" + std::to_string(cls.order()) +
                                                ", graph has n=" + std::to_string(n));
  }
  const SimpleGraph y = insert_edge(g, e);
  const VertexMask both = vertex_bit(e.i) | vertex_bit(e.j);
  ReliabilityProfile prof{n, std::vector<std::uint64_t>(n, 0)};
  const VertexMask end = VertexMask{1} << n;
  for (VertexMask mask = 1; mask < end; ++mask) {
    if (cls.connected(mask) || ((mask & both) == both && subset_connected(y, mask))) {
      ++prof.counts[std::popcount(mask) - 1];
    }
  }
  return prof;
}

double evaluate_polynomial(const ReliabilityProfile& prof, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::kProbabilityRange, "p must lie in [0, 1]");
  const int n = prof.n;
  double sum = 0.0;
  for (int r = 1; r <= n; ++r) {
    sum += static_cast<double>(prof.s(r)) * std::pow(p, r) * std::pow(1.0 - p, n - r);
  }
  return sum;
}

Rational score_F(const ReliabilityProfile& prof) {
  const int n = prof.n;
  BigInt numerator = 0;
  for (int r = 1; r <= n; ++r) numerator += BigInt(prof.s(r)) * factorial(r) * factorial(n - r);
  return Rational(numerator, factorial(n + 1));
}

void write_profiles_csv(std::ostream& out, std::span<const ReliabilityProfile> profiles) {
  int widest = 0;
  for (const auto& p : profiles) widest = std::max(widest, p.n);
  out << "n";
  for (int r = 1; r <= widest; ++r) out << ",S_" << r;
  out << ",F\n";
  for (const auto& p : profiles) {
    out << p.n;
    for (int r = 1; r <= widest; ++r) {
      out << ',';
      if (r <= p.n) out << p.s(r);
    }
    out << ',' << format_rational(score_F(p)) << '\n';
  }
}

}  // namespace vrel
