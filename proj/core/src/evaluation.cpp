#include "vrel/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "vrel/canonical.hpp"
#include "vrel/error.hpp"
#include "vrel/reliability.hpp"

namespace vrel {
namespace {

// Table II row order.
constexpr HeuristicId kReportOrder[] = {
    HeuristicId::kAlpha,  HeuristicId::kBeta,     HeuristicId::kGamma,        HeuristicId::kDelta,  HeuristicId::kPhi,
    HeuristicId::kRandom, HeuristicId::kBPostHoc, HeuristicId::kGammaPostHoc, HeuristicId::kPhiCap,
};

int report_rank(HeuristicId id) {
  return static_cast<int>(std::find(std::begin(kReportOrder), std::end(kReportOrder), id) - std::begin(kReportOrder));
}

bool is_post_hoc(HeuristicId id) { return id == HeuristicId::kBPostHoc || id == HeuristicId::kGammaPostHoc; }

Rational mean_of(std::span<const Rational> values, const char* what) {
  if (values.empty()) throw Error(Errc::kEmptyInput, std::string(what) + " of an empty list");
  Rational sum = 0;
  for (const auto& v : values) sum += v;
  return sum / static_cast<long>(values.size());
}

RdiRecord post_hoc_record(const RdiRecord& base) {
  HeuristicResult result{base.heuristic, {}};
  std::map<EdgeInsertion, Rational> scores;
  for (const auto& ins : base.insertions) {
    result.candidates.push_back({ins.edge, {}});
    scores.emplace(ins.edge, ins.score);
  }
  const HeuristicResult pick = derive_post_hoc(result, scores);
  RdiRecord out = base;
  out.heuristic = pick.id;
  out.insertions.clear();
  for (const auto& ins : base.insertions) {
    if (ins.edge == pick.candidates.front().edge) out.insertions.push_back(ins);
  }
  out.rdi = out.insertions.front().rdi;
  return out;
}

std::vector<Rational> per_graph_rdi(const std::map<std::string, std::map<HeuristicId, const RdiRecord*>>& by_graph,
                                    HeuristicId id) {
  std::vector<Rational> out;
  out.reserve(by_graph.size());
  for (const auto& [graph, recs] : by_graph) out.push_back(recs.at(id)->rdi);
  return out;
}

}  // namespace

Rational rdi_insertion(const Rational& f, const Rational& f_best, const Rational& f_worst) {
  if (f < f_worst || f > f_best) throw Error(Errc::kOutsideBounds, "score outside [F_W, F_B]");
  if (f_best == f_worst) return Rational(0);
  return (f_best - f) / (f_best - f_worst);
}

Rational rdi_heuristic(std::span<const Rational> insertion_rdis) { return mean_of(insertion_rdis, "RDI"); }

Rational mrdi(std::span<const Rational> graph_rdis) { return mean_of(graph_rdis, "MRDI"); }

std::uint64_t graph_seed(std::uint64_t seed, const std::string& graph_id) {
  return derive_seed({seed, fnv1a64(graph_id)});
}

std::vector<RdiRecord> evaluate_graph(const DatasetGraph& input, std::span<const HeuristicId> heuristics,
                                      std::uint64_t seed) {
  if (heuristics.empty()) throw Error(Errc::kEmptyInput, "no heuristics selected");
  const SimpleGraph& g = input.graph;
  const SubsetClassification cls = classify_subsets(g);
  const std::uint64_t local_seed = graph_seed(seed, input.id);

  std::vector<HeuristicResult> results;
  results.reserve(heuristics.size());
  std::map<EdgeInsertion, Rational> scores;
  for (HeuristicId id : heuristics) {
    results.push_back(apply_heuristic(id, g, local_seed));
    for (const auto& c : results.back().candidates) scores.emplace(c.edge, Rational(0));
  }
  for (auto& [edge, score] : scores) score = score_F(recount_for_insertion(g, cls, edge));

  Rational f_best = scores.begin()->second;
  Rational f_worst = f_best;
  for (const auto& [edge, score] : scores) {
    f_best = std::max(f_best, score);
    f_worst = std::min(f_worst, score);
  }

  std::vector<RdiRecord> out;
  out.reserve(results.size());
  for (const auto& res : results) {
    RdiRecord rec{input.id, input.model, g.order(), res.id, {}, 0, f_best, f_worst};
    std::vector<Rational> rdis;
    for (const auto& c : res.candidates) {
      const Rational& f = scores.at(c.edge);
      rec.insertions.push_back({c.edge, f, rdi_insertion(f, f_best, f_worst)});
      rdis.push_back(rec.insertions.back().rdi);
    }
    rec.rdi = rdi_heuristic(rdis);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<RdiRecord> evaluate_dataset(std::span<const DatasetGraph> graphs, std::span<const HeuristicId> heuristics,
                                        std::uint64_t seed, int jobs) {
  std::vector<std::vector<RdiRecord>> per_graph(graphs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < graphs.size(); k = next++) {
      try {
        per_graph[k] = evaluate_graph(graphs[k], heuristics, seed);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = graphs.size();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<RdiRecord> out;
  for (auto& recs : per_graph) {
    for (auto& r : recs) out.push_back(std::move(r));
  }
  return out;
}

const HeuristicSummary* ExperimentReport::find(HeuristicId id) const {
  for (const auto& s : summaries) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

ExperimentReport summarize(std::vector<RdiRecord> records) {
  if (records.empty()) throw Error(Errc::kEmptyInput, "no records to summarize");

  std::set<HeuristicId> present;
  for (const auto& r : records) present.insert(r.heuristic);
  std::map<std::string, std::map<HeuristicId, std::size_t>> index;
  for (std::size_t k = 0; k < records.size(); ++k) {
    auto& slot = index[records[k].graph_id];
    if (!slot.emplace(records[k].heuristic, k).second) {
      throw Error(Errc::kIncompleteRecords, "duplicate record for graph " + records[k].graph_id);
    }
  }
  for (const auto& [graph, slot] : index) {
    if (slot.size() != present.size()) {
      throw Error(Errc::kIncompleteRecords, "graph " + graph + " lacks records for some heuristics");
    }
  }

  // Post-hoc selections, one per graph.
  std::vector<RdiRecord> derived;
  for (const auto& [graph, slot] : index) {
    for (auto [base, target] : {std::pair{HeuristicId::kBeta, HeuristicId::kBPostHoc},
                                std::pair{HeuristicId::kGamma, HeuristicId::kGammaPostHoc}}) {
      const auto it = slot.find(base);
      if (it != slot.end() && !slot.contains(target)) derived.push_back(post_hoc_record(records[it->second]));
    }
  }
  for (auto& r : derived) records.push_back(std::move(r));
  std::sort(records.begin(), records.end(), [](const RdiRecord& a, const RdiRecord& b) {
    if (a.graph_id != b.graph_id) return a.graph_id < b.graph_id;
    return report_rank(a.heuristic) < report_rank(b.heuristic);
  });

  ExperimentReport report;
  report.graph_count = index.size();
  std::map<std::string, std::map<HeuristicId, const RdiRecord*>> by_graph;
  for (const auto& r : records) by_graph[r.graph_id][r.heuristic] = &r;

  for (HeuristicId id : kReportOrder) {
    if (!by_graph.begin()->second.contains(id)) continue;
    HeuristicSummary s;
    s.id = id;
    std::vector<Rational> graph_rdis;
    Rational sum = 0;
    Rational sum_sq = 0;
    for (const auto& [graph, recs] : by_graph) {
      const RdiRecord& r = *recs.at(id);
      graph_rdis.push_back(r.rdi);
      bool hit = false;
      for (const auto& ins : r.insertions) {
        ++s.insertions;
        sum += ins.rdi;
        sum_sq += ins.rdi * ins.rdi;
        if (ins.score == r.best_score) {
          ++s.best;
          hit = true;
        }
      }
      if (hit) ++s.unique_best;
    }
    s.mrdi = mrdi(graph_rdis);
    const Rational mean = sum / static_cast<long>(s.insertions);
    const Rational variance = sum_sq / static_cast<long>(s.insertions) - mean * mean;
    s.sd_rdi = std::sqrt(std::max(0.0, to_double(variance)));
    report.summaries.push_back(std::move(s));
  }

  for (const auto& s : report.summaries) {
    if (is_post_hoc(s.id)) continue;
    const HeuristicSummary* current = report.best ? report.find(*report.best) : nullptr;
    if (current == nullptr || s.mrdi < current->mrdi) report.best = s.id;
  }

  constexpr std::pair<HeuristicId, HeuristicId> kPairs[] = {
      {HeuristicId::kPhiCap, HeuristicId::kBPostHoc},
      {HeuristicId::kPhiCap, HeuristicId::kGammaPostHoc},
      {HeuristicId::kGammaPostHoc, HeuristicId::kBPostHoc},
  };
  if (report.graph_count >= kMinTestGraphs) {
    for (const auto& [first, second] : kPairs) {
      if (!report.find(first) || !report.find(second)) continue;
      const auto a = per_graph_rdi(by_graph, first);
      const auto b = per_graph_rdi(by_graph, second);
      // H1: the first heuristic has lower RDI, i.e. median(RDI_second - RDI_first) > 0.
      PairTest t{first, second, wilcoxon_one_sided(std::span<const Rational>(b), std::span<const Rational>(a)), 1.0};
      t.p_bonferroni = bonferroni(t.result.p_value, static_cast<int>(std::size(kPairs)));
      report.tests.push_back(t);
    }
  }
  report.records = std::move(records);
  return report;
}

std::vector<TimingRow> timing_benchmark(std::span<const DatasetGraph> graphs, std::span<const HeuristicId> heuristics,
                                        int repetitions, std::uint64_t seed) {
  if (repetitions <= 0) throw Error(Errc::kEmptyInput, "timing needs at least one repetition");
  if (graphs.empty()) throw Error(Errc::kEmptyInput, "timing needs a nonempty dataset");
  if (heuristics.empty()) throw Error(Errc::kEmptyInput, "no heuristics selected");

  std::map<std::pair<int, int>, std::vector<double>> samples;  // (order, heuristic rank) -> ms
  volatile std::size_t sink = 0;
  for (const auto& item : graphs) {
    const std::uint64_t local_seed = graph_seed(seed, item.id);
    for (HeuristicId id : heuristics) {
      double best = INFINITY;
      for (int rep = 0; rep < repetitions; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        const HeuristicResult r = apply_heuristic(id, item.graph, local_seed);
        const auto stop = std::chrono::steady_clock::now();
        sink = sink + r.candidates.size();
        best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
      }
      samples[{item.graph.order(), report_rank(id)}].push_back(best);
    }
  }
  // Table I row order within each order.
  constexpr HeuristicId kTimingOrder[] = {HeuristicId::kAlpha, HeuristicId::kBeta,   HeuristicId::kGamma,
                                          HeuristicId::kDelta, HeuristicId::kPhi,    HeuristicId::kRandom,
                                          HeuristicId::kPhiCap};
  std::vector<TimingRow> rows;
  std::set<int> orders;
  for (const auto& [key, v] : samples) orders.insert(key.first);
  for (int order : orders) {
    for (HeuristicId id : kTimingOrder) {
      const auto it = samples.find({order, report_rank(id)});
      if (it == samples.end()) continue;
      std::vector<double> v = it->second;
      std::sort(v.begin(), v.end());
      TimingRow row{order, id, v.size()};
      row.min_ms = v.front();
      row.max_ms = v.back();
      const std::size_t mid = v.size() / 2;
      row.median_ms = v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
      double sum = 0;
      for (double x : v) sum += x;
      row.mean_ms = sum / v.size();
      double ss = 0;
      for (double x : v) ss += (x - row.mean_ms) * (x - row.mean_ms);
      row.sd_ms = v.size() > 1 ? std::sqrt(ss / (v.size() - 1)) : 0.0;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace vrel
