#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vrel/generators.hpp"
#include "vrel/heuristics.hpp"
#include "vrel/rational.hpp"
#include "vrel/wilcoxon.hpp"

namespace vrel {

// (F_B - F) / (F_B - F_W), or 0 when F_B == F_W. Throws kOutsideBounds unless
// F_W <= F <= F_B.
Rational rdi_insertion(const Rational& f, const Rational& f_best, const Rational& f_worst);
// Mean over one heuristic's insertions on one graph.
Rational rdi_heuristic(std::span<const Rational> insertion_rdis);
// Mean over graphs.
Rational mrdi(std::span<const Rational> graph_rdis);

struct InsertionRdi {
  EdgeInsertion edge;
  Rational score;  // F(G + edge)
  Rational rdi;
};

struct RdiRecord {
  std::string graph_id;
  std::string model;
  int order = 0;
  HeuristicId heuristic = HeuristicId::kAlpha;
  std::vector<InsertionRdi> insertions;
  Rational rdi;  // mean over insertions
  Rational best_score;
  Rational worst_score;
};

// One graph through the whole procedure: apply each heuristic, score every
// distinct insertion with the incremental recount, then RDI against the
// best/worst over all of them. `seed` feeds the random heuristic through a
// per-graph derived seed.
std::vector<RdiRecord> evaluate_graph(const DatasetGraph& input, std::span<const HeuristicId> heuristics,
                                      std::uint64_t seed);

// Per-graph fan-out over up to `jobs` threads; output ordered by input index.
std::vector<RdiRecord> evaluate_dataset(std::span<const DatasetGraph> graphs, std::span<const HeuristicId> heuristics,
                                        std::uint64_t seed, int jobs = 1);

std::uint64_t graph_seed(std::uint64_t seed, const std::string& graph_id);

struct HeuristicSummary {
  HeuristicId id = HeuristicId::kAlpha;
  std::size_t insertions = 0;
  std::size_t best = 0;         // insertions reaching the graph's F_B
  std::size_t unique_best = 0;  // graphs with at least one such insertion
  Rational mrdi;
  double sd_rdi = 0.0;  // population SD over per-insertion RDIs
};

struct PairTest {
  HeuristicId first = HeuristicId::kPhiCap;
  HeuristicId second = HeuristicId::kBPostHoc;
  WilcoxonResult result;
  double p_bonferroni = 1.0;
};

// Fewer graphs than this and the signed-rank comparisons are skipped.
inline constexpr std::size_t kMinTestGraphs = 10;

struct ExperimentReport {
  std::size_t graph_count = 0;
  std::vector<HeuristicSummary> summaries;  // report order
  std::vector<PairTest> tests;
  std::vector<RdiRecord> records;  // sorted by graph id, then report order
  std::optional<HeuristicId> best;  // minimum MRDI among non-post-hoc heuristics

  const HeuristicSummary* find(HeuristicId id) const;
};

// Materializes b-posthoc / gamma-posthoc from the beta / gamma records, then
// aggregates. Every graph must carry one record per heuristic
// (kIncompleteRecords otherwise). The comparisons (phi-cap, b-posthoc),
// (phi-cap, gamma-posthoc), (gamma-posthoc, b-posthoc) test whether the first
// heuristic has lower per-graph RDI, Bonferroni factor 3.
ExperimentReport summarize(std::vector<RdiRecord> records);

struct TimingRow {
  int order = 0;
  HeuristicId id = HeuristicId::kAlpha;
  std::size_t samples = 0;
  double min_ms = 0;
  double max_ms = 0;
  double median_ms = 0;
  double mean_ms = 0;
  double sd_ms = 0;
};

// Per graph and heuristic, the best of `repetitions` wall-clock runs of the
// heuristic alone; aggregated per order.
std::vector<TimingRow> timing_benchmark(std::span<const DatasetGraph> graphs, std::span<const HeuristicId> heuristics,
                                        int repetitions, std::uint64_t seed);

}  // namespace vrel
