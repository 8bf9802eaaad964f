// stirbern: tables, Bernoulli numbers of the second kind, verification suites
// and fixture cross-checks from the command line.
//
// Exit codes: 0 success, 1 check failure, 2 usage or parse error.

#include "stirbern/bernoulli2.hpp"
#include "stirbern/coeff_table.hpp"
#include "stirbern/fixture.hpp"
#include "stirbern/output.hpp"
#include "stirbern/series_oracle.hpp"
#include "stirbern/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace stirbern;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

constexpr const char* kFormatEnv = "STIRBERN_FORMAT";

OutputFormat default_format() {
  if (const char* env = std::getenv(kFormatEnv); env != nullptr && *env != '\0')
    return parse_output_format(env);
  return OutputFormat::plain;
}

std::string render_records(const std::vector<OutputRecord>& records, OutputFormat format) {
  if (format == OutputFormat::json) return records_to_json(records);
  std::ostringstream os;
  for (const auto& r : records) {
    if (format == OutputFormat::csv) {
      for (long i : r.indices) os << i << ',';
      os << r.method << ',' << r.value << ',' << to_string(r.status) << '\n';
    } else {
      os << to_string(r.kind);
      for (long i : r.indices) os << ' ' << i;
      if (!r.method.empty()) os << ' ' << r.method;
      os << ' ' << r.value << ' ' << to_string(r.status) << '\n';
    }
  }
  return os.str();
}

int run_bernoulli2(int n, const std::string& method, OutputFormat format) {
  if (n < 0) throw std::invalid_argument("bernoulli2: --n must be >= 0");
  std::vector<OutputRecord> records;
  auto add = [&](const std::string& name, const Rational& v) {
    records.push_back({RecordKind::bernoulli2, {n}, v.str(), RecordStatus::ok, name});
  };
  const bool all = method == "all";
  if (all || method == "qi") add("qi", bernoulli2_qi(n));
  if (all || method == "nemes") add("nemes", bernoulli2_nemes(n));
  if (all || method == "series") add("series", bernoulli2_series(n)[n]);
  bool agree = true;
  for (const auto& r : records) agree = agree && r.value == records.front().value;
  if (!agree)
    for (auto& r : records) r.status = RecordStatus::mismatch;
  std::cout << render_records(records, format);
  return agree ? 0 : kExitCheckFailed;
}

int run_verify(const std::string& suite, std::optional<int> n_max, std::optional<double> tol,
               OutputFormat format) {
  const auto results = run_suite(parse_suite(suite), VerifyOptions{n_max, tol});
  std::cout << (format == OutputFormat::json ? render_report_json(results) : render_report(results));
  return all_passed(results) ? 0 : kExitCheckFailed;
}

int run_oeis_check(const std::string& kind, const std::string& fixture) {
  const auto rep = oeis_check(fixture, parse_fixture_kind(kind));
  for (const auto& d : rep.mismatch_details) std::cout << "MISMATCH " << d << '\n';
  std::cout << (rep.ok() ? "PASS" : "FAIL") << "  " << kind << " fixture " << fixture
            << "  matches=" << rep.matches << " mismatches=" << rep.mismatches << '\n';
  return rep.ok() ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stirling numbers of the first kind, derivative coefficients of 1/ln x, "
               "and Bernoulli numbers of the second kind in exact arithmetic"};
  app.require_subcommand(1);

  std::string format_name;

  auto* table = app.add_subcommand("table", "print the Stirling triangle or the coefficient table");
  std::string table_kind;
  int table_n_max = 0;
  table->add_option("kind", table_kind, "stirling or coeffs")->required()->check(CLI::IsMember({"stirling", "coeffs"}));
  table->add_option("--n-max", table_n_max, "largest row")->required();
  table->add_option("--format", format_name)->check(CLI::IsMember({"plain", "csv", "json"}));

  auto* bern = app.add_subcommand("bernoulli2", "Bernoulli number of the second kind b_n");
  int bern_n = 0;
  std::string method = "all";
  bern->add_option("--n", bern_n, "index n")->required();
  bern->add_option("--method", method, "qi, nemes, series or all")
      ->check(CLI::IsMember({"qi", "nemes", "series", "all"}));
  bern->add_option("--format", format_name)->check(CLI::IsMember({"plain", "csv", "json"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  std::optional<int> verify_n_max;
  std::optional<double> tol;
  verify->add_option("suite", suite, "core, derivatives, thm41, thm42, conjecture or all")
      ->check(CLI::IsMember({"core", "derivatives", "thm41", "thm42", "conjecture", "all"}));
  verify->add_option("--n-max", verify_n_max, "range bound (suite-specific default)");
  verify->add_option("--tol", tol, "relative tolerance for floating-point checks");
  verify->add_option("--format", format_name)->check(CLI::IsMember({"plain", "json"}));

  auto* oeis = app.add_subcommand("oeis-check", "compare against a local fixture file");
  std::string fixture_kind;
  std::string fixture;
  oeis->add_option("kind", fixture_kind, "stirling, bernoulli2-num or bernoulli2-den")
      ->required()
      ->check(CLI::IsMember({"stirling", "bernoulli2-num", "bernoulli2-den"}));
  oeis->add_option("--fixture", fixture, "fixture path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const OutputFormat format = format_name.empty() ? default_format() : parse_output_format(format_name);
    if (*table) {
      std::cout << render_table(parse_table_kind(table_kind), table_n_max, format);
      return 0;
    }
    if (*bern) return run_bernoulli2(bern_n, method, format);
    if (*verify) return run_verify(suite, verify_n_max, tol, format);
    if (*oeis) return run_oeis_check(fixture_kind, fixture);
  } catch (const FixtureParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
