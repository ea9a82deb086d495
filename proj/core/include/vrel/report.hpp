#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vrel/evaluation.hpp"

namespace vrel {

// Configuration echoed as "# key=value" lines at the top of every CSV and
// under "config" in JSON bundles.
struct ReportHeader {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
};

void write_summary_csv(std::ostream& out, const ExperimentReport& report, const ReportHeader& header);
void write_rdi_csv(std::ostream& out, const ExperimentReport& report, const ReportHeader& header);
void write_tests_csv(std::ostream& out, const ExperimentReport& report, const ReportHeader& header);
void write_timing_csv(std::ostream& out, std::span<const TimingRow> rows, const ReportHeader& header);

std::string report_json(const ExperimentReport& report, const ReportHeader& header);
std::string timing_json(std::span<const TimingRow> rows, const ReportHeader& header);

// summary.csv, rdi.csv, tests.csv and report.json under `dir`.
void write_report_files(const std::filesystem::path& dir, const ExperimentReport& report, const ReportHeader& header);

}  // namespace vrel
