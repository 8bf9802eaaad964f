#include "stirbern/coeff_table.hpp"
#include "stirbern/conjecture.hpp"

#include <doctest.h>

#include "table1.hpp"

using namespace stirbern;

TEST_CASE("published table") {
  const CoeffTable a(11);
  const auto& rows = published_coefficients();
  for (int n = 1; n <= 11; ++n)
    for (std::size_t j = 0; j < rows[n - 1].size(); ++j) {
      CAPTURE(n);
      CAPTURE(j + 2);
      CHECK(a(n, static_cast<int>(j) + 2) == rows[n - 1][j]);
    }
  CHECK(a(1, 2) == 1);
  CHECK(a(4, 3) == 22);
  CHECK(a(10, 3) == 2053152);
}

TEST_CASE("boundary values, recurrence and positivity") {
  const int N = 30;
  const CoeffTable a(N);
  CHECK(a.n_max() == N);
  for (int n = 1; n <= N; ++n) {
    CHECK(a(n, 2) == factorial(n - 1));
    CHECK(a(n, n + 1) == factorial(n));
    for (int i = 2; i <= n + 1; ++i) CHECK(a(n, i) > 0);
    if (n < N)
      for (int i = 3; i <= n + 1; ++i) CHECK(a(n + 1, i) == (i - 1) * a(n, i - 1) + n * a(n, i));
  }
  CHECK(a(3, 1) == 0);
  CHECK(a(3, 5) == 0);
  CHECK(a(0, 1) == 1);
  CHECK(a(0, 2) == 0);
  CHECK_THROWS_AS(CoeffTable(0), std::invalid_argument);
  CHECK_THROWS_AS(a.row(31), std::out_of_range);
}

TEST_CASE("link to Stirling numbers") {
  CHECK(a_from_stirling(5, 4) == 210);
  CHECK(a_from_stirling(4, 3) == 22);
  const StirlingTriangle s(40);
  const CoeffTable a(40);
  for (int n = 1; n <= 40; ++n) {
    CHECK(a_from_stirling(s, n, 2) == factorial(n - 1));
    for (int i = 2; i <= n + 1; ++i) CHECK(a_from_stirling(s, n, i) == a(n, i));
  }
  CHECK_THROWS_AS(a_from_stirling(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(a_from_stirling(3, 5), std::invalid_argument);
}

TEST_CASE("conjecture scan") {
  for (int n_max : {2, 6, 11, 40}) {
    const auto rep = conjecture_check(n_max);
    CAPTURE(n_max);
    CHECK(rep.ok());
    CHECK(rep.monotonicity_violations.empty());
    CHECK(rep.unimodality_violations.empty());
  }
  // a(1,2) = a(2,2) = 1 is the only tie in n
  const auto rep = conjecture_check(11);
  REQUIRE(rep.monotonicity_ties.size() == 1);
  CHECK(rep.monotonicity_ties[0] == std::pair{1, 2});
  // row 3 is 2, 6, 6
  CHECK(std::find(rep.plateau_rows.begin(), rep.plateau_rows.end(), 3) != rep.plateau_rows.end());
  CHECK_THROWS_AS(conjecture_check(1), std::invalid_argument);
}

TEST_CASE("unimodality predicate") {
  auto seq = [](std::initializer_list<long> v) { return std::vector<Integer>(v.begin(), v.end()); };
  CHECK(is_unimodal(seq({24, 100, 210, 240, 120})));
  CHECK(is_unimodal(seq({2, 6, 6})));
  CHECK(is_unimodal(seq({})));
  CHECK(is_unimodal(seq({5, 4, 3})));
  CHECK_FALSE(is_unimodal(seq({1, 3, 2, 4})));
  CHECK_FALSE(is_unimodal(seq({3, 1, 3})));
}
