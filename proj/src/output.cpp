#include "stirbern/output.hpp"

#include "stirbern/coeff_table.hpp"
#include "stirbern/stirling.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace stirbern {

std::string to_string(RecordKind k) {
  switch (k) {
    case RecordKind::stirling: return "stirling";
    case RecordKind::coeff: return "coeff";
    case RecordKind::bernoulli2: return "bernoulli2";
    case RecordKind::verify_report: return "verify-report";
  }
  return "?";
}

std::string to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::ok: return "ok";
    case RecordStatus::mismatch: return "mismatch";
    case RecordStatus::error: return "error";
  }
  return "?";
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::plain: return "plain";
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
  }
  return "?";
}

RecordKind parse_record_kind(std::string_view s) {
  if (s == "stirling") return RecordKind::stirling;
  if (s == "coeff") return RecordKind::coeff;
  if (s == "bernoulli2") return RecordKind::bernoulli2;
  if (s == "verify-report") return RecordKind::verify_report;
  throw std::invalid_argument("unknown record kind: " + std::string(s));
}

RecordStatus parse_record_status(std::string_view s) {
  if (s == "ok") return RecordStatus::ok;
  if (s == "mismatch") return RecordStatus::mismatch;
  if (s == "error") return RecordStatus::error;
  throw std::invalid_argument("unknown record status: " + std::string(s));
}

OutputFormat parse_output_format(std::string_view s) {
  if (s == "plain") return OutputFormat::plain;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format: " + std::string(s));
}

TableKind parse_table_kind(std::string_view s) {
  if (s == "stirling") return TableKind::stirling;
  if (s == "coeffs") return TableKind::coeffs;
  throw std::invalid_argument("unknown table kind: " + std::string(s));
}

std::string records_to_json(const std::vector<OutputRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(r.kind);
    j["indices"] = r.indices;
    j["value"] = r.value;
    j["status"] = to_string(r.status);
    if (!r.method.empty()) j["method"] = r.method;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<OutputRecord> records_from_json(std::string_view text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("expected a JSON array of records");
  std::vector<OutputRecord> out;
  for (const auto& j : arr) {
    OutputRecord r;
    r.kind = parse_record_kind(j.at("kind").get<std::string>());
    r.indices = j.at("indices").get<std::vector<long>>();
    r.value = j.at("value").get<std::string>();
    r.status = parse_record_status(j.at("status").get<std::string>());
    if (j.contains("method")) r.method = j.at("method").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<OutputRecord> table_records(TableKind kind, int n_max) {
  if (n_max < 1) throw std::invalid_argument("table: n_max must be >= 1");
  std::vector<OutputRecord> out;
  if (kind == TableKind::stirling) {
    const StirlingTriangle s(n_max);
    for (int n = 0; n <= n_max; ++n)
      for (int k = 0; k <= n; ++k) out.push_back({RecordKind::stirling, {n, k}, s(n, k).str(), RecordStatus::ok, {}});
  } else {
    const CoeffTable a(n_max);
    for (int n = 1; n <= n_max; ++n)
      for (int i = 2; i <= n + 1; ++i) out.push_back({RecordKind::coeff, {n, i}, a(n, i).str(), RecordStatus::ok, {}});
  }
  return out;
}

std::string render_table(TableKind kind, int n_max, OutputFormat format) {
  const auto records = table_records(kind, n_max);
  if (format == OutputFormat::json) return records_to_json(records);
  std::ostringstream os;
  if (format == OutputFormat::csv) {
    for (const auto& r : records) os << r.indices[0] << ',' << r.indices[1] << ',' << r.value << '\n';
    return os.str();
  }
  long row = -1;
  for (const auto& r : records) {
    if (r.indices[0] != row) {
      if (row >= 0) os << '\n';
      row = r.indices[0];
      os << "n=" << row << ':';
    }
    os << ' ' << r.value;
  }
  os << '\n';
  return os.str();
}

}  // namespace stirbern
