#include "stirbern/output.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace stirbern;

TEST_CASE("plain coefficient table") {
  const auto text = render_table(TableKind::coeffs, 5, OutputFormat::plain);
  CHECK(text.find("n=5: 24 100 210 240 120\n") != std::string::npos);
  CHECK(render_table(TableKind::coeffs, 1, OutputFormat::plain) == "n=1: 1\n");
}

TEST_CASE("csv Stirling triples") {
  const auto text = render_table(TableKind::stirling, 3, OutputFormat::csv);
  CHECK(text.find("\n3,2,-3\n") != std::string::npos);
  CHECK(text.rfind("0,0,1\n", 0) == 0);
}

TEST_CASE("deterministic output") {
  for (auto f : {OutputFormat::plain, OutputFormat::csv, OutputFormat::json})
    CHECK(render_table(TableKind::stirling, 9, f) == render_table(TableKind::stirling, 9, f));
}

TEST_CASE("json round trip") {
  const auto json = render_table(TableKind::stirling, 6, OutputFormat::json);
  const auto records = records_from_json(json);
  CHECK(records == table_records(TableKind::stirling, 6));
  CHECK(records_to_json(records) == json);

  std::vector<OutputRecord> b2{{RecordKind::bernoulli2, {4}, "-19/720", RecordStatus::mismatch, "qi"}};
  CHECK(records_from_json(records_to_json(b2)) == b2);
  CHECK_THROWS(records_from_json("{\"kind\": 1}"));
}

TEST_CASE("enum parsing") {
  CHECK(parse_output_format("csv") == OutputFormat::csv);
  CHECK(parse_table_kind("coeffs") == TableKind::coeffs);
  CHECK(to_string(RecordKind::verify_report) == "verify-report");
  CHECK_THROWS_AS(parse_output_format("xml"), std::invalid_argument);
  CHECK_THROWS_AS(render_table(TableKind::coeffs, 0, OutputFormat::plain), std::invalid_argument);
}
