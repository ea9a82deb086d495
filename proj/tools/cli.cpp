#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vrel/error.hpp"
#include "vrel/evaluation.hpp"
#include "vrel/graph_io.hpp"
#include "vrel/reliability.hpp"
#include "vrel/report.hpp"

namespace vrel::cli {
namespace {

using nlohmann::json;

constexpr std::string_view kToolVersion = "0.1.0";

// A usage problem detected after CLI11 accepted the flags.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) s += sep;
    s += parts[k];
  }
  return s;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_criterion(const Criterion& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return format_rational(std::get<Rational>(c));
}

std::vector<HeuristicId> parse_heuristic_list(const std::string& text) {
  if (text.empty() || text == "all") {
    const auto all = operational_heuristics();
    return {all.begin(), all.end()};
  }
  std::vector<HeuristicId> ids;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto id = parse_heuristic(token);
    if (!id) throw UsageError("unknown heuristic '" + token + "'");
    if (*id == HeuristicId::kBPostHoc || *id == HeuristicId::kGammaPostHoc) {
      throw UsageError("'" + token + "' is derived during evaluate and cannot be selected");
    }
    if (std::find(ids.begin(), ids.end(), *id) == ids.end()) ids.push_back(*id);
  }
  return ids;
}

bool uses_random(const RunConfig& config) {
  return std::find(config.heuristics.begin(), config.heuristics.end(), HeuristicId::kRandom) !=
         config.heuristics.end();
}

void require_seed_for_random(const RunConfig& config) {
  if (uses_random(config) && !config.seed) {
    throw UsageError("--seed is required when the random heuristic is selected");
  }
}

std::string heuristic_list_text(const std::vector<HeuristicId>& ids) {
  std::vector<std::string> names;
  for (HeuristicId id : ids) names.emplace_back(heuristic_name(id));
  return join(names, ';');
}

ReportHeader base_header(const RunConfig& config) {
  ReportHeader h;
  h.add("tool", "vrel " + std::string(kToolVersion));
  h.add("subcommand", config.subcommand);
  h.add("input", config.input);
  h.add("seed", config.seed ? std::to_string(*config.seed) : "none");
  h.add("heuristics", heuristic_list_text(config.heuristics));
  return h;
}

void write_file_text(const std::string& dir, const std::string& name, const std::string& text) {
  write_text_file(std::filesystem::path(dir) / name, text);
}

}  // namespace

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::kOverBudget:
    case Errc::kQuotaFailure:
      return kExitBudget;
    case Errc::kParameterRange:
    case Errc::kProbabilityRange:
      return kExitUsage;
    default:
      return kExitData;
  }
}

int cmd_generate(const RunConfig& config, std::ostream& out) {
  if (!config.seed) throw UsageError("--seed is required: datasets must be reproducible");
  DatasetSpec spec = config.dataset;
  spec.master_seed = *config.seed;
  spec.validate();
  const Dataset dataset = build_dataset(spec);
  write_dataset(config.output, dataset);
  out << "model,order,attempts,accepted,acceptance_rate\n";
  for (const auto& c : dataset.cells) {
    const double rate = c.attempts == 0 ? 0.0 : static_cast<double>(c.accepted) / c.attempts;
    out << model_name(c.model) << ',' << c.order << ',' << c.attempts << ',' << c.accepted << ','
        << format_double(rate) << '\n';
  }
  out << "# wrote " << dataset.graphs.size() << " graphs to " << config.output << '\n';
  return kExitOk;
}

int cmd_recommend(const RunConfig& config, std::ostream& out) {
  if (config.p && (*config.p < 0.0 || *config.p > 1.0)) throw UsageError("--p must lie in [0, 1]");
  const SimpleGraph g = read_graph_file(config.input);
  if (!is_connected(g)) throw Error(Errc::kDisconnected, "input graph is disconnected");
  if (g.is_complete()) throw Error(Errc::kNoInsertion, "graph is complete; no insertion possible");
  require_seed_for_random(config);
  if (config.exact && g.order() > kEnumerationBudget) {
    throw Error(Errc::kOverBudget, "--exact needs n <= " + std::to_string(kEnumerationBudget) + ", got " +
                                       std::to_string(g.order()));
  }

  std::optional<SubsetClassification> cls;
  Rational base_f;
  double base_r = 0.0;
  if (config.exact) {
    cls = classify_subsets(g);
    const ReliabilityProfile prof = count_connected(*cls);
    base_f = score_F(prof);
    if (config.p) base_r = evaluate_polynomial(prof, *config.p);
  }

  struct Row {
    HeuristicId id;
    Candidate cand;
    Rational f;
    double r = 0.0;
  };
  std::vector<Row> rows;
  for (HeuristicId id : config.heuristics) {
    const HeuristicResult res = apply_heuristic(id, g, config.seed.value_or(0));
    for (const auto& c : res.candidates) {
      Row row{id, c, Rational(0), 0.0};
      if (cls) {
        const ReliabilityProfile prof = recount_for_insertion(g, *cls, c.edge);
        row.f = score_F(prof);
        if (config.p) row.r = evaluate_polynomial(prof, *config.p);
      }
      rows.push_back(std::move(row));
    }
  }

  if (config.format == OutputFormat::kJson) {
    json list = json::array();
    for (const auto& r : rows) {
      json crit = json::array();
      for (const auto& c : r.cand.criteria) crit.push_back(format_criterion(c));
      json item{{"heuristic", heuristic_name(r.id)}, {"i", r.cand.edge.i}, {"j", r.cand.edge.j}, {"criteria", crit}};
      if (cls) item["F"] = format_rational(r.f);
      if (cls && config.p) item["R_N"] = r.r;
      list.push_back(std::move(item));
    }
    json doc{{"config", {{"input", config.input},
                         {"n", g.order()},
                         {"m", g.size()},
                         {"seed", config.seed ? json(*config.seed) : json(nullptr)},
                         {"heuristics", heuristic_list_text(config.heuristics)}}},
             {"candidates", list}};
    if (cls) doc["base_F"] = format_rational(base_f);
    if (cls && config.p) {
      doc["p"] = *config.p;
      doc["base_R_N"] = base_r;
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }

  ReportHeader h = base_header(config);
  h.add("n", std::to_string(g.order()));
  h.add("m", std::to_string(g.size()));
  if (cls) h.add("base_F", format_rational(base_f));
  if (cls && config.p) {
    h.add("p", format_double(*config.p));
    h.add("base_R_N", format_double(base_r));
  }
  for (const auto& [k, v] : h.fields) out << "# " << k << '=' << v << '\n';
  out << "heuristic,i,j,criteria";
  if (cls) out << ",F";
  if (cls && config.p) out << ",R_N";
  out << '\n';
  for (const auto& r : rows) {
    std::vector<std::string> crit;
    for (const auto& c : r.cand.criteria) crit.push_back(format_criterion(c));
    out << heuristic_name(r.id) << ',' << r.cand.edge.i << ',' << r.cand.edge.j << ',' << join(crit, ';');
    if (cls) out << ',' << format_rational(r.f);
    if (cls && config.p) out << ',' << format_double(r.r);
    out << '\n';
  }
  return kExitOk;
}

int cmd_evaluate(const RunConfig& config, std::ostream& out) {
  require_seed_for_random(config);
  if (config.jobs < 1) throw UsageError("--jobs must be at least 1");
  const LoadedDataset data = load_dataset(config.input);
  const auto records = evaluate_dataset(data.graphs, config.heuristics, config.seed.value_or(0), config.jobs);
  const ExperimentReport report = summarize(records);

  ReportHeader h = base_header(config);
  h.add("manifest_hash", data.manifest_hash);
  h.add("dataset_spec", data.spec_json);
  if (!config.output.empty()) write_report_files(config.output, report, h);
  if (config.format == OutputFormat::kJson) {
    out << report_json(report, h);
  } else {
    write_summary_csv(out, report, h);
  }
  return kExitOk;
}

int cmd_bench(const RunConfig& config, std::ostream& out) {
  require_seed_for_random(config);
  if (config.repetitions < 1) throw UsageError("--repetitions must be at least 1");
  const LoadedDataset data = load_dataset(config.input);
  const auto rows = timing_benchmark(data.graphs, config.heuristics, config.repetitions, config.seed.value_or(0));

  ReportHeader h = base_header(config);
  h.add("manifest_hash", data.manifest_hash);
  h.add("dataset_spec", data.spec_json);
  h.add("repetitions", std::to_string(config.repetitions));
  std::ostringstream csv;
  write_timing_csv(csv, rows, h);
  if (!config.output.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(config.output, ec);
    if (ec) throw Error(Errc::kIo, "cannot create " + config.output + ": " + ec.message());
    write_file_text(config.output, "timing.csv", csv.str());
    write_file_text(config.output, "timing.json", timing_json(rows, h));
  }
  out << (config.format == OutputFormat::kJson ? timing_json(rows, h) : csv.str());
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex-reliability edge insertion toolkit", "vrel"};
  app.require_subcommand(1);

  RunConfig config;
  std::string heuristics_text;
  std::string format_text = "csv";
  std::uint64_t seed = 0;
  double p = 0.0;
  const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::kCsv}, {"json", OutputFormat::kJson}};

  auto* gen = app.add_subcommand("generate", "Build a dataset of random connected graphs");
  gen->add_option("--orders", config.dataset.orders, "Graph orders, e.g. 10,11,12")->delimiter(',')->required();
  gen->add_option("--er", config.dataset.er_count, "Erdos-Renyi graphs per order");
  gen->add_option("--ba", config.dataset.ba_count, "Barabasi-Albert graphs per order");
  gen->add_option("--ws", config.dataset.ws_count, "Watts-Strogatz graphs per order");
  gen->add_option("--er-p", config.dataset.er_p, "Edge probability")->capture_default_str();
  gen->add_option("--ba-m", config.dataset.ba_m, "Edges per new vertex")->capture_default_str();
  gen->add_option("--ws-k", config.dataset.ws_k, "Lattice degree")->capture_default_str();
  gen->add_option("--ws-beta", config.dataset.ws_beta, "Rewiring probability")->capture_default_str();
  gen->add_option("--max-attempts", config.dataset.max_attempts, "Stall limit per accepted graph")
      ->capture_default_str();
  gen->add_option("--seed", seed, "Master seed (required)");
  gen->add_option("--out", config.output, "Dataset directory")->required();

  auto* rec = app.add_subcommand("recommend", "List the insertions each heuristic picks");
  rec->add_option("graph", config.input, "Graph file (.el or .g6)")->required();
  rec->add_option("--heuristics", heuristics_text, "Comma-separated ids or 'all'");
  rec->add_flag("--exact", config.exact, "Score candidates exactly (n <= 24)");
  rec->add_option("--p", p, "Vertex survival probability for R_N");
  rec->add_option("--seed", seed, "Seed for the random heuristic");
  rec->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* eval = app.add_subcommand("evaluate", "Run the RDI evaluation over a dataset");
  eval->add_option("dataset", config.input, "Dataset directory")->required();
  eval->add_option("--out", config.output, "Report directory");
  eval->add_option("--heuristics", heuristics_text, "Comma-separated ids or 'all'");
  eval->add_option("--seed", seed, "Seed for the random heuristic");
  eval->add_option("--jobs", config.jobs, "Worker threads")->capture_default_str();
  eval->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* bench = app.add_subcommand("bench", "Time each heuristic over a dataset");
  bench->add_option("dataset", config.input, "Dataset directory")->required();
  bench->add_option("--repetitions", config.repetitions, "Runs per graph; the best is kept")->capture_default_str();
  bench->add_option("--heuristics", heuristics_text, "Comma-separated ids or 'all'");
  bench->add_option("--out", config.output, "Timing directory");
  bench->add_option("--seed", seed, "Seed for the random heuristic");
  bench->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  config.subcommand = chosen->get_name();
  if (chosen->count("--seed") > 0) config.seed = seed;
  if (chosen->get_option_no_throw("--p") && chosen->count("--p") > 0) config.p = p;
  config.format = formats.at(format_text);

  try {
    if (config.subcommand != "generate") config.heuristics = parse_heuristic_list(heuristics_text);
    if (config.subcommand == "generate") return cmd_generate(config, out);
    if (config.subcommand == "recommend") return cmd_recommend(config, out);
    if (config.subcommand == "evaluate") return cmd_evaluate(config, out);
    return cmd_bench(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace vrel::cli
