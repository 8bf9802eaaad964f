#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stirbern {

enum class RecordKind { stirling, coeff, bernoulli2, verify_report };
enum class RecordStatus { ok, mismatch, error };
enum class OutputFormat { plain, csv, json };

std::string to_string(RecordKind k);
std::string to_string(RecordStatus s);
std::string to_string(OutputFormat f);
RecordKind parse_record_kind(std::string_view s);
RecordStatus parse_record_status(std::string_view s);
OutputFormat parse_output_format(std::string_view s);

// One machine-readable result. `value` holds an exact integer ("-3") or a
// rational in lowest terms with the sign on the numerator ("-19/720").
struct OutputRecord {
  RecordKind kind = RecordKind::stirling;
  std::vector<long> indices;
  std::string value;
  RecordStatus status = RecordStatus::ok;
  std::string method;  // optional, which computation route produced `value`

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

std::string records_to_json(const std::vector<OutputRecord>& records);
std::vector<OutputRecord> records_from_json(std::string_view text);

enum class TableKind { stirling, coeffs };

TableKind parse_table_kind(std::string_view s);

std::vector<OutputRecord> table_records(TableKind kind, int n_max);

// plain: one row per line, "n=<n>: v v v"; csv: "n,k,value" triples; json: record array.
std::string render_table(TableKind kind, int n_max, OutputFormat format);

}  // namespace stirbern
