#include "stirbern/fixture.hpp"

#include "stirbern/bernoulli2.hpp"
#include "stirbern/stirling.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace stirbern {

namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

long parse_index(const std::string& tok, int line) {
  try {
    const Rational r = Rational::parse(tok);
    if (!r.is_integer() || r.sign() < 0 || r.num() > 100000) throw std::invalid_argument(tok);
    return static_cast<long>(r.num());
  } catch (const std::invalid_argument&) {
    throw FixtureParseError(line, "bad index '" + tok + "'");
  }
}

Rational parse_value(const std::string& tok, int line) {
  try {
    return Rational::parse(tok);
  } catch (const std::invalid_argument&) {
    throw FixtureParseError(line, "bad value '" + tok + "'");
  }
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

FixtureKind parse_fixture_kind(std::string_view s) {
  if (s == "stirling") return FixtureKind::stirling;
  if (s == "bernoulli2-num") return FixtureKind::bernoulli2_num;
  if (s == "bernoulli2-den") return FixtureKind::bernoulli2_den;
  throw std::invalid_argument("unknown fixture kind: " + std::string(s));
}

std::vector<FixtureRow> parse_stirling_csv(std::istream& in) {
  std::vector<FixtureRow> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(trim(f));
    if (fields.size() != 3) throw FixtureParseError(lineno, "expected 'n,k,value', got '" + line + "'");
    FixtureRow row;
    row.indices = {parse_index(fields[0], lineno), parse_index(fields[1], lineno)};
    row.expected = parse_value(fields[2], lineno);
    row.line = lineno;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<FixtureRow> parse_bfile(std::istream& in) {
  std::vector<FixtureRow> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::istringstream ss(line);
    std::string idx, val, extra;
    if (!(ss >> idx >> val) || (ss >> extra))
      throw FixtureParseError(lineno, "expected 'index value', got '" + line + "'");
    FixtureRow row;
    row.indices = {parse_index(idx, lineno)};
    row.expected = parse_value(val, lineno);
    if (!row.expected.is_integer()) throw FixtureParseError(lineno, "b-file values must be integers");
    row.line = lineno;
    rows.push_back(std::move(row));
  }
  return rows;
}

OeisCheckReport oeis_check(const std::vector<FixtureRow>& rows, FixtureKind kind) {
  OeisCheckReport rep;
  if (rows.empty()) return rep;
  long n_max = 0;
  for (const auto& r : rows) n_max = std::max(n_max, r.indices[0]);
  const StirlingTriangle s(static_cast<int>(n_max));

  for (const auto& r : rows) {
    const int n = static_cast<int>(r.indices[0]);
    Rational got;
    if (kind == FixtureKind::stirling) {
      got = Rational(s(n, static_cast<int>(r.indices[1])));
    } else {
      const Rational b = bernoulli2_nemes(s, n);
      got = Rational(kind == FixtureKind::bernoulli2_num ? b.num() : b.den());
    }
    if (got == r.expected) {
      ++rep.matches;
    } else {
      ++rep.mismatches;
      rep.mismatch_details.push_back("line " + std::to_string(r.line) + ": expected " +
                                     r.expected.str() + ", computed " + got.str());
    }
  }
  return rep;
}

OeisCheckReport oeis_check(const std::filesystem::path& path, FixtureKind kind) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read fixture file: " + path.string());
  const auto rows = kind == FixtureKind::stirling ? parse_stirling_csv(in) : parse_bfile(in);
  return oeis_check(rows, kind);
}

}  // namespace stirbern
