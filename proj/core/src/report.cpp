#include "vrel/report.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "vrel/error.hpp"
#include "vrel/graph_io.hpp"

namespace vrel {
namespace {

using nlohmann::json;

void write_header(std::ostream& out, const ReportHeader& header) {
  for (const auto& [key, value] : header.fields) out << "# " << key << '=' << value << '\n';
}

json header_json(const ReportHeader& header) {
  json config = json::object();
  for (const auto& [key, value] : header.fields) config[key] = value;
  return config;
}

std::string fixed(double x, int digits) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

}  // namespace

void write_summary_csv(std::ostream& out, const ExperimentReport& report, const ReportHeader& header) {
  write_header(out, header);
  out << "heuristic,insertions,best,unique_best,mrdi,mrdi_value,sd_rdi,graphs,is_best\n";
  for (const auto& s : report.summaries) {
    out << heuristic_name(s.id) << ',' << s.insertions << ',' << s.best << ',' << s.unique_best << ','
        << format_rational(s.mrdi) << ',' << fixed(to_double(s.mrdi), 10) << ',' << fixed(s.sd_rdi, 10) << ','
        << report.graph_count << ',' << (report.best == s.id ? 1 : 0) << '\n';
  }
  out << "# sd_rdi is the population SD over per-insertion RDIs; the per-graph variant follows from rdi.csv\n";
}

void write_rdi_csv(std::ostream& out, const ExperimentReport& report, const ReportHeader& header) {
  write_header(out, header);
  out << "graph_id,model,order,heuristic,i,j,score,rdi,heuristic_rdi,f_best,f_worst\n";
  for (const auto& r : report.records) {
    const std::string hr = format_rational(r.rdi);
    const std::string fb = format_rational(r.best_score);
    const std::string fw = format_rational(r.worst_score);
    for (const auto& ins : r.insertions) {
      out << r.graph_id << ',' << r.model << ',' << r.order << ',' << heuristic_name(r.heuristic) << ',' << ins.edge.i
          << ',' << ins.edge.j << ',' << format_rational(ins.score) << ',' << format_rational(ins.rdi) << ',' << hr
          << ',' << fb << ',' << fw << '\n';
    }
  }
}

void write_tests_csv(std::ostream& out, const ExperimentReport& report, const ReportHeader& header) {
  write_header(out, header);
  out << "first,second,nonzero,w_plus,t_star,p_value,p_bonferroni,effect_r,mode\n";
  for (const auto& t : report.tests) {
    out << heuristic_name(t.first) << ',' << heuristic_name(t.second) << ',' << t.result.nonzero << ','
        << fixed(t.result.w_plus, 12) << ',' << fixed(t.result.t_star, 10) << ',' << fixed(t.result.p_value, 10)
        << ',' << fixed(t.p_bonferroni, 10) << ',' << fixed(t.result.effect_r, 10) << ','
        << (t.result.exact ? "exact" : "normal") << '\n';
  }
  if (report.tests.empty()) out << "# tests skipped: fewer than " << kMinTestGraphs << " graphs\n";
}

void write_timing_csv(std::ostream& out, std::span<const TimingRow> rows, const ReportHeader& header) {
  write_header(out, header);
  out << "order,heuristic,samples,min_ms,max_ms,median_ms,mean_ms,sd_ms\n";
  for (const auto& r : rows) {
    out << r.order << ',' << heuristic_name(r.id) << ',' << r.samples << ',' << fixed(r.min_ms, 6) << ','
        << fixed(r.max_ms, 6) << ',' << fixed(r.median_ms, 6) << ',' << fixed(r.mean_ms, 6) << ','
        << fixed(r.sd_ms, 6) << '\n';
  }
}

std::string report_json(const ExperimentReport& report, const ReportHeader& header) {
  json summaries = json::array();
  for (const auto& s : report.summaries) {
    summaries.push_back({{"heuristic", heuristic_name(s.id)},
                         {"insertions", s.insertions},
                         {"best", s.best},
                         {"unique_best", s.unique_best},
                         {"mrdi", format_rational(s.mrdi)},
                         {"mrdi_value", to_double(s.mrdi)},
                         {"sd_rdi", s.sd_rdi}});
  }
  json tests = json::array();
  for (const auto& t : report.tests) {
    tests.push_back({{"first", heuristic_name(t.first)},
                     {"second", heuristic_name(t.second)},
                     {"nonzero", t.result.nonzero},
                     {"w_plus", t.result.w_plus},
                     {"t_star", t.result.t_star},
                     {"p_value", t.result.p_value},
                     {"p_bonferroni", t.p_bonferroni},
                     {"effect_r", t.result.effect_r},
                     {"exact", t.result.exact}});
  }
  json graphs = json::array();
  for (const auto& r : report.records) {
    json ins = json::array();
    for (const auto& i : r.insertions) {
      ins.push_back({{"i", i.edge.i}, {"j", i.edge.j}, {"score", format_rational(i.score)}, {"rdi", format_rational(i.rdi)}});
    }
    graphs.push_back({{"graph_id", r.graph_id},
                      {"model", r.model},
                      {"order", r.order},
                      {"heuristic", heuristic_name(r.heuristic)},
                      {"rdi", format_rational(r.rdi)},
                      {"f_best", format_rational(r.best_score)},
                      {"f_worst", format_rational(r.worst_score)},
                      {"insertions", ins}});
  }
  json bundle{{"config", header_json(header)},
              {"graph_count", report.graph_count},
              {"best", report.best ? json(heuristic_name(*report.best)) : json(nullptr)},
              {"summary", summaries},
              {"tests", tests},
              {"records", graphs}};
  return bundle.dump(2) + "\n";
}

std::string timing_json(std::span<const TimingRow> rows, const ReportHeader& header) {
  json table = json::array();
  for (const auto& r : rows) {
    table.push_back({{"order", r.order},
                     {"heuristic", heuristic_name(r.id)},
                     {"samples", r.samples},
                     {"min_ms", r.min_ms},
                     {"max_ms", r.max_ms},
                     {"median_ms", r.median_ms},
                     {"mean_ms", r.mean_ms},
                     {"sd_ms", r.sd_ms}});
  }
  return json{{"config", header_json(header)}, {"timing", table}}.dump(2) + "\n";
}

void write_report_files(const std::filesystem::path& dir, const ExperimentReport& report, const ReportHeader& header) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(Errc::kIo, "cannot create " + dir.string() + ": " + ec.message());
  std::ostringstream summary, rdi, tests;
  write_summary_csv(summary, report, header);
  write_rdi_csv(rdi, report, header);
  write_tests_csv(tests, report, header);
  write_text_file(dir / "summary.csv", summary.str());
  write_text_file(dir / "rdi.csv", rdi.str());
  write_text_file(dir / "tests.csv", tests.str());
  write_text_file(dir / "report.json", report_json(report, header));
}

}  // namespace vrel
