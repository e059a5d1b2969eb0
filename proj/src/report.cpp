#include "depmeas/report.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <stdexcept>

#include "depmeas/classical.hpp"

namespace depmeas {

namespace {

using nlohmann::json;

constexpr double kLn2 = 0.6931471805599453;

const char* variant_name(RhoMVariant v) {
  return v == RhoMVariant::kDefinition1 ? "definition1" : "example4-compat";
}

json probs_json(const JointTable& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < t.cols(); ++j) row.push_back(t.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct ResolvedContext {
  std::optional<NumericSupport> supports;
  std::string supports_origin;  // "explicit" or "default" when set
  std::optional<double> sample_size;
};

ResolvedContext resolve_context(const JointTable& table, const TableInput& input,
                                const AnalyzeOptions& opts) {
  ResolvedContext ctx;
  if (input.values_x && input.values_y) {
    ctx.supports = NumericSupport{*input.values_x, *input.values_y};
    ctx.supports_origin = "explicit";
  } else if (opts.default_supports) {
    NumericSupport s;
    s.x.resize(table.rows());
    s.y.resize(table.cols());
    std::iota(s.x.begin(), s.x.end(), 1.0);
    std::iota(s.y.begin(), s.y.end(), 1.0);
    ctx.supports = std::move(s);
    ctx.supports_origin = "default";
  }
  if (opts.sample_size)
    ctx.sample_size = *opts.sample_size;
  else if (input.kind == TableKind::kCounts)
    ctx.sample_size = input.count_total;
  return ctx;
}

double require_sample_size(const ResolvedContext& ctx) {
  if (!ctx.sample_size)
    throw std::invalid_argument(
        "requires a sample size (counts input or --sample-size)");
  return *ctx.sample_size;
}

const NumericSupport& require_supports(const ResolvedContext& ctx) {
  if (!ctx.supports)
    throw std::invalid_argument(
        "requires numeric supports (values_x/values_y or --default-supports)");
  return *ctx.supports;
}

}  // namespace

const std::vector<std::string>& known_measures() {
  static const std::vector<std::string> names = {
      "phi",  "component_distance", "pearson",   "rho_m",       "mi",
      "chi2", "ea",                 "cramers_v", "tschuprow_t"};
  return names;
}

json analyze(const TableInput& input, const AnalyzeOptions& opts,
             const std::string& source_name) {
  const JointTable table = to_joint_table(input);
  const ResolvedContext ctx = resolve_context(table, input, opts);

  for (const std::string& name : opts.measures)
    if (std::find(known_measures().begin(), known_measures().end(), name) ==
        known_measures().end())
      throw std::invalid_argument("unknown measure: " + name);

  json in = json::object();
  if (!source_name.empty()) in["source"] = source_name;
  in["digest"] = table_digest_hex(table);
  in["rows"] = table.rows();
  in["cols"] = table.cols();
  in["kind"] = input.kind == TableKind::kCounts ? "counts" : "probs";
  in["probs"] = probs_json(table);
  if (!table.row_labels().empty()) in["row_labels"] = table.row_labels();
  if (!table.col_labels().empty()) in["col_labels"] = table.col_labels();
  if (ctx.supports) {
    in["values_x"] = ctx.supports->x;
    in["values_y"] = ctx.supports->y;
  }
  if (ctx.sample_size) in["sample_size"] = *ctx.sample_size;

  json report = json::object();
  report["schema"] = "depmeas-report-v1";
  report["input"] = std::move(in);
  report["options"] = json{{"rho_m_variant", variant_name(opts.rho_m_variant)},
                           {"log_base", opts.log_base == LogBase::kNats ? "nats" : "bits"}};

  const bool is_2x2 = table.rows() == 2 && table.cols() == 2;
  std::vector<std::string> requested = opts.measures;
  if (requested.empty()) {
    // Default set: everything the input can support.
    for (const std::string& name : known_measures()) {
      if ((name == "phi" || name == "component_distance") && !is_2x2) continue;
      if (name == "pearson" && !ctx.supports) continue;
      if ((name == "chi2" || name == "cramers_v" || name == "tschuprow_t") &&
          !ctx.sample_size)
        continue;
      requested.push_back(name);
    }
  }

  json measures = json::object();
  std::vector<std::string> warnings;
  for (const std::string& name : requested) {
    try {
      if (name == "phi") {
        measures[name] = json{{"value", phi_coefficient(table)}};
      } else if (name == "component_distance") {
        measures[name] = json{{"value", phi_component_distance(table)}};
      } else if (name == "pearson") {
        const NumericSupport& s = require_supports(ctx);
        measures[name] =
            json{{"value", pearson_rho(table, s)}, {"supports", ctx.supports_origin}};
      } else if (name == "rho_m") {
        const RhoMResult r = rho_m(table, opts.rho_m_variant, opts.candidate_cap);
        measures[name] = json{{"value", r.value},
                              {"numerator", r.numerator},
                              {"denominator", r.denominator},
                              {"x_candidates", r.x_candidates},
                              {"y_candidates", r.y_candidates},
                              {"variant", variant_name(r.variant)},
                              {"exceeds_unit_bound", r.exceeds_unit}};
        if (r.x_candidates > 1 || r.y_candidates > 1)
          warnings.push_back("rho_m: argmax ties branch into " +
                             std::to_string(r.x_candidates) + " X-candidate(s) and " +
                             std::to_string(r.y_candidates) + " Y-candidate(s)");
        if (r.exceeds_unit)
          warnings.push_back("rho_m: value exceeds 1 + 1e-9; reported unclamped");
      } else if (name == "mi") {
        const double nats = mutual_information(table);
        const bool bits = opts.log_base == LogBase::kBits;
        measures[name] =
            json{{"value", bits ? nats / kLn2 : nats}, {"units", bits ? "bits" : "nats"}};
      } else if (name == "chi2") {
        const double n = require_sample_size(ctx);
        measures[name] = json{{"value", chi_squared(table, n)}, {"sample_size", n}};
      } else if (name == "ea") {
        measures[name] = json{{"value", degree_of_dependence_ea(table)}};
      } else if (name == "cramers_v") {
        measures[name] = json{{"value", cramers_v(table, require_sample_size(ctx))}};
      } else if (name == "tschuprow_t") {
        measures[name] = json{{"value", tschuprow_t(table, require_sample_size(ctx))}};
      }
    } catch (const std::exception& e) {
      measures[name] = json{{"error", std::string(name) + ": " + e.what()}};
    }
  }
  report["measures"] = std::move(measures);
  report["warnings"] = warnings;
  return report;
}

std::string render_report(const json& report, ReportFormat format) {
  if (format == ReportFormat::kJson) return report.dump(2) + "\n";

  const json measures =
      report.contains("measures") ? report["measures"] : json::object();
  const auto cell = [&](const json& m, const char* key) -> std::string {
    if (!m.contains(key)) return "";
    return m[key].is_string() ? m[key].get<std::string>() : m[key].dump();
  };

  if (format == ReportFormat::kCsv) {
    std::string out = "measure,value,error\n";
    for (const std::string& name : known_measures()) {
      if (!measures.contains(name)) continue;
      std::string err = cell(measures[name], "error");
      std::replace(err.begin(), err.end(), ',', ';');
      out += name + "," + cell(measures[name], "value") + "," + err + "\n";
    }
    return out;
  }

  // Markdown.
  std::string out;
  const json& in = report.contains("input") ? report["input"] : json::object();
  out += "# Dependence report\n\n";
  if (in.contains("source")) out += "Source: `" + in["source"].get<std::string>() + "`\n\n";
  if (in.contains("rows"))
    out += "Table: " + in["rows"].dump() + " x " + in["cols"].dump() + " (" +
           cell(in, "kind") + "), digest `" + cell(in, "digest") + "`\n\n";
  out += "| measure | value | notes |\n|---|---|---|\n";
  for (const std::string& name : known_measures()) {
    if (!measures.contains(name)) continue;
    const json& m = measures[name];
    std::string notes;
    if (m.contains("error")) notes = cell(m, "error");
    if (m.contains("units")) notes = cell(m, "units");
    if (m.contains("variant")) notes = "variant " + cell(m, "variant");
    out += "| " + name + " | " + cell(m, "value") + " | " + notes + " |\n";
  }
  if (report.contains("warnings"))
    for (const auto& w : report["warnings"])
      out += "\nWarning: " + w.get<std::string>() + "\n";
  return out;
}

std::vector<std::pair<std::string, json>> batch_analyze(const std::string& dir,
                                                        const AnalyzeOptions& opts,
                                                        ExecMode exec) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw std::runtime_error("batch input is not a directory: " + dir);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = entry.path().extension().string();
    if (ext == ".csv" || ext == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

  std::vector<std::pair<std::string, json>> results(files.size());
  for_each_index(files.size(), exec, [&](std::size_t i) {
    const std::string name = files[i].filename().string();
    try {
      const TableInput input = read_table(files[i].string(), std::nullopt, std::nullopt);
      results[i] = {name, analyze(input, opts, name)};
    } catch (const std::exception& e) {
      results[i] = {name, json{{"source", name}, {"error", e.what()}}};
    }
  });
  return results;
}

}  // namespace depmeas
