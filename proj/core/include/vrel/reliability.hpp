#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "vrel/graph.hpp"
#include "vrel/rational.hpp"

namespace vrel {

// Largest order whose 2^n subsets we are willing to enumerate.
inline constexpr int kEnumerationBudget = 24;

// One connectivity flag per vertex subset of a single graph, indexed by mask.
class SubsetClassification {
 public:
  int order() const { return n_; }
  bool connected(VertexMask mask) const { return (flags_[mask >> 6] >> (mask & 63)) & 1U; }

 private:
  friend SubsetClassification classify_subsets(const SimpleGraph& g);

  int n_ = 0;
  std::vector<std::uint64_t> flags_;
};

// counts[r - 1] = S_r, the number of connected induced subgraphs on r vertices.
struct ReliabilityProfile {
  int n = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t s(int r) const { return counts[r - 1]; }
  friend bool operator==(const ReliabilityProfile&, const ReliabilityProfile&) = default;
};

SubsetClassification classify_subsets(const SimpleGraph& g);
ReliabilityProfile count_connected(const SubsetClassification& cls);
ReliabilityProfile reliability_profile(const SimpleGraph& g);

// Profile of g + e, re-testing only the masks that are disconnected in `cls`
// and contain both endpoints of e.
ReliabilityProfile recount_for_insertion(const SimpleGraph& g, const SubsetClassification& cls, EdgeInsertion e);

// R_N(G, p) = sum_r S_r p^r (1-p)^(n-r).
double evaluate_polynomial(const ReliabilityProfile& prof, double p);

// Exact integral of R_N over [0, 1]: sum_r S_r r! (n-r)! / (n+1)!.
Rational score_F(const ReliabilityProfile& prof);

// Columns n, S_1..S_n, F ("num/den"); profiles may have different n.
void write_profiles_csv(std::ostream& out, std::span<const ReliabilityProfile> profiles);

}  // namespace vrel
