#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "depmeas/table.hpp"

namespace depmeas {

enum class TableKind { kCounts, kProbs };
enum class TableFormat { kCsv, kJson };

// A parsed table plus the optional side data the file formats can carry.
struct TableInput {
  std::vector<std::vector<double>> matrix;
  TableKind kind = TableKind::kCounts;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::optional<std::vector<double>> values_x;  // numeric support for the rows
  std::optional<std::vector<double>> values_y;  // numeric support for the columns
  std::optional<double> count_total;            // set when kind == kCounts
};

// CSV matrix: comma-separated numeric cells, one row per line. An optional
// leading header line carries column labels (detected by having no numeric
// cell at all) and an optional first column carries row labels (detected by
// the first data cell failing to parse as a number); a corner cell above the
// row labels is dropped. `kind` is taken from the caller (CSV carries no kind).
TableInput read_csv_table(const std::string& path, TableKind kind);

// JSON table: an object with exactly one of "counts" or "probs" (a rectangular
// array of arrays) plus optional "row_labels", "col_labels", "values_x",
// "values_y". A report produced by analyze() is also accepted: its embedded
// normalized table under input.probs is re-read. `kind_override` forces the
// interpretation regardless of the key found.
TableInput read_json_table(const std::string& path,
                           std::optional<TableKind> kind_override);

// Dispatch on explicit format, or on the file extension when absent.
TableInput read_table(const std::string& path, std::optional<TableFormat> format,
                      std::optional<TableKind> kind_override);

// Validates TableInput into a JointTable (normalizing exactly once).
JointTable to_joint_table(const TableInput& input);

// FNV-1a 64-bit digest over the dimensions and the IEEE bit patterns of the
// normalized probabilities; stable across platforms.
std::uint64_t table_digest(const JointTable& t);
std::string table_digest_hex(const JointTable& t);

}  // namespace depmeas
