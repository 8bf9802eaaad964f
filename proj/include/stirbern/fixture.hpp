#pragma once

#include "stirbern/rational.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stirbern {

// Fixture files checked into the repository for external cross-validation.
//   stirling:           "n,k,value" per line
//   bernoulli2-num/den: b-file style "index value" whitespace separated
// Blank lines and lines starting with '#' are ignored in both.

struct FixtureRow {
  std::vector<long> indices;
  Rational expected;
  int line = 0;
};

class FixtureParseError : public std::runtime_error {
 public:
  FixtureParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class FixtureKind { stirling, bernoulli2_num, bernoulli2_den };

FixtureKind parse_fixture_kind(std::string_view s);

std::vector<FixtureRow> parse_stirling_csv(std::istream& in);
std::vector<FixtureRow> parse_bfile(std::istream& in);

struct OeisCheckReport {
  int matches = 0;
  int mismatches = 0;
  std::vector<std::string> mismatch_details;
  bool ok() const { return mismatches == 0; }
};

OeisCheckReport oeis_check(const std::vector<FixtureRow>& rows, FixtureKind kind);

// Throws std::invalid_argument for an unreadable file and FixtureParseError for bad content.
OeisCheckReport oeis_check(const std::filesystem::path& path, FixtureKind kind);

}  // namespace stirbern
