#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "depmeas/dependence.hpp"
#include "depmeas/io.hpp"
#include "depmeas/oracle.hpp"

namespace depmeas {

enum class LogBase { kNats, kBits };
enum class ReportFormat { kJson, kCsv, kMarkdown };

struct AnalyzeOptions {
  // Measure names to compute; empty means every measure applicable to the
  // input. Explicitly requested measures that cannot be computed produce a
  // structured error entry instead of aborting the run.
  std::vector<std::string> measures;
  bool default_supports = false;  // use 1..n / 1..m when the file has no values
  RhoMVariant rho_m_variant = RhoMVariant::kDefinition1;
  LogBase log_base = LogBase::kNats;
  std::optional<double> sample_size;  // overrides the counts total
  std::size_t candidate_cap = kDefaultCandidateCap;
};

// Every measure name analyze() understands, in report order.
const std::vector<std::string>& known_measures();

// Computes the requested measures over one parsed table and returns the
// report object. Field names are stable; re-reading the report's embedded
// normalized table and re-analyzing reproduces identical values bit for bit.
nlohmann::json analyze(const TableInput& input, const AnalyzeOptions& opts,
                       const std::string& source_name = "");

std::string render_report(const nlohmann::json& report, ReportFormat format);

// Analyzes every *.csv / *.json file in a directory, in filename order. File
// analysis may run in parallel; emission order is always by filename. Files
// that fail to parse or validate yield an {"error": ...} report inline.
std::vector<std::pair<std::string, nlohmann::json>> batch_analyze(
    const std::string& dir, const AnalyzeOptions& opts,
    ExecMode exec = ExecMode::kParallel);

}  // namespace depmeas
