#include "depmeas/io.hpp"

#include <bit>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace depmeas {

namespace {

using nlohmann::json;

std::string strip(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(strip(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

bool parse_number(const std::string& cell, double& out) {
  const char* first = cell.data();
  const char* last = first + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && !cell.empty();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<double> number_array(const json& j, const std::string& key) {
  if (!j.is_array()) throw std::runtime_error("JSON field '" + key + "' must be an array");
  std::vector<double> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) throw std::runtime_error("JSON field '" + key + "' must hold numbers");
    v.push_back(e.get<double>());
  }
  return v;
}

std::vector<std::string> string_array(const json& j, const std::string& key) {
  if (!j.is_array()) throw std::runtime_error("JSON field '" + key + "' must be an array");
  std::vector<std::string> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw std::runtime_error("JSON field '" + key + "' must hold strings");
    v.push_back(e.get<std::string>());
  }
  return v;
}

std::vector<std::vector<double>> matrix_from_json(const json& j, const std::string& key) {
  if (!j.is_array() || j.empty())
    throw std::runtime_error("JSON field '" + key + "' must be a nonempty array of arrays");
  std::vector<std::vector<double>> m;
  m.reserve(j.size());
  for (const auto& row : j) m.push_back(number_array(row, key));
  return m;
}

double matrix_total(const std::vector<std::vector<double>>& m) {
  double total = 0.0;
  for (const auto& row : m)
    for (double v : row) total += v;
  return total;
}

}  // namespace

TableInput read_csv_table(const std::string& path, TableKind kind) {
  const std::string text = read_file(path);
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    lines.push_back(split_csv_line(line));
  }
  if (lines.empty()) throw std::runtime_error("CSV table is empty: " + path);

  TableInput input;
  input.kind = kind;

  // A first line with no numeric cell at all is a header of column labels; a
  // mixed first line (label then numbers) is a data row with a row label. The
  // remaining lines carry row labels exactly when their first cell is not a
  // number.
  double probe = 0.0;
  std::size_t first_data_line = 0;
  bool has_header = true;
  for (const std::string& cell : lines[0])
    if (parse_number(cell, probe)) {
      has_header = false;
      break;
    }
  if (has_header) {
    first_data_line = 1;
    if (lines.size() < 2) throw std::runtime_error("CSV table has a header but no data rows");
  }

  const bool has_row_labels = !parse_number(lines[first_data_line][0], probe);
  for (std::size_t r = first_data_line; r < lines.size(); ++r) {
    const auto& cells = lines[r];
    std::vector<double> row;
    std::size_t start = 0;
    if (has_row_labels) {
      input.row_labels.push_back(cells[0]);
      start = 1;
    }
    for (std::size_t c = start; c < cells.size(); ++c) {
      double v = 0.0;
      if (!parse_number(cells[c], v))
        throw std::runtime_error("CSV cell is not numeric at line " + std::to_string(r + 1) +
                                 ", column " + std::to_string(c + 1) + ": '" + cells[c] + "'");
      row.push_back(v);
    }
    if (!input.matrix.empty() && row.size() != input.matrix[0].size())
      throw std::runtime_error("CSV rows have unequal lengths");
    input.matrix.push_back(std::move(row));
  }
  if (input.matrix.empty()) throw std::runtime_error("CSV table has no data rows");

  if (has_header) {
    auto header = lines[0];
    // With row labels present the header may carry a corner cell; drop it.
    if (has_row_labels && header.size() == input.matrix[0].size() + 1)
      header.erase(header.begin());
    if (header.size() != input.matrix[0].size())
      throw std::runtime_error("CSV header length does not match the data columns");
    input.col_labels = std::move(header);
  }

  if (kind == TableKind::kCounts) input.count_total = matrix_total(input.matrix);
  return input;
}

TableInput read_json_table(const std::string& path,
                           std::optional<TableKind> kind_override) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw std::runtime_error("JSON parse failure in " + path + ": " + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("JSON table must be an object: " + path);

  TableInput input;
  const json* matrix = nullptr;
  if (j.contains("counts")) {
    matrix = &j["counts"];
    input.kind = TableKind::kCounts;
  } else if (j.contains("probs")) {
    matrix = &j["probs"];
    input.kind = TableKind::kProbs;
  } else if (j.contains("input") && j["input"].is_object() && j["input"].contains("probs")) {
    // A report written by analyze(): re-read its normalized table.
    matrix = &j["input"]["probs"];
    input.kind = TableKind::kProbs;
  } else {
    throw std::runtime_error("JSON table needs a 'counts' or 'probs' field: " + path);
  }
  input.matrix = matrix_from_json(*matrix, "counts/probs");
  if (kind_override) input.kind = *kind_override;

  const json& side = j.contains("input") && j["input"].is_object() ? j["input"] : j;
  if (side.contains("row_labels")) input.row_labels = string_array(side["row_labels"], "row_labels");
  if (side.contains("col_labels")) input.col_labels = string_array(side["col_labels"], "col_labels");
  if (side.contains("values_x")) input.values_x = number_array(side["values_x"], "values_x");
  if (side.contains("values_y")) input.values_y = number_array(side["values_y"], "values_y");

  if (input.kind == TableKind::kCounts) input.count_total = matrix_total(input.matrix);
  return input;
}

TableInput read_table(const std::string& path, std::optional<TableFormat> format,
                      std::optional<TableKind> kind_override) {
  TableFormat fmt;
  if (format) {
    fmt = *format;
  } else if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
    fmt = TableFormat::kCsv;
  } else if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    fmt = TableFormat::kJson;
  } else {
    throw std::runtime_error("cannot infer table format from extension: " + path);
  }
  if (fmt == TableFormat::kCsv)
    return read_csv_table(path, kind_override.value_or(TableKind::kCounts));
  return read_json_table(path, kind_override);
}

JointTable to_joint_table(const TableInput& input) {
  if (input.kind == TableKind::kCounts)
    return JointTable::from_counts(input.matrix, input.row_labels, input.col_labels);
  return JointTable::from_probs(input.matrix, input.row_labels, input.col_labels);
}

std::uint64_t table_digest(const JointTable& t) {
  std::uint64_t h = 1469598103934665603ull;  // FNV offset basis
  const auto mix = [&h](std::uint64_t word) {
    for (int k = 0; k < 8; ++k) {
      h ^= (word >> (8 * k)) & 0xffull;
      h *= 1099511628211ull;  // FNV prime
    }
  };
  mix(t.rows());
  mix(t.cols());
  for (double v : t.flat()) mix(std::bit_cast<std::uint64_t>(v));
  return h;
}

std::string table_digest_hex(const JointTable& t) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(table_digest(t)));
  return std::string(buf);
}

}  // namespace depmeas
