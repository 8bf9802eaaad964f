#include "stirbern/harmonic_nest.hpp"

#include <doctest.h>

#include <functional>

using stirbern::HarmonicNest;
using stirbern::Integer;
using stirbern::Rational;
using stirbern::harmonic_nest;

namespace {

// Exponential-time enumeration of all chains m >= l1 > l2 > ... > lj >= 1.
Rational chains_brute_force(int depth, int m) {
  Rational total;
  std::function<void(int, int, Rational)> walk = [&](int left, int upper, Rational prod) {
    if (left == 0) {
      total += prod;
      return;
    }
    for (int l = upper; l >= 1; --l) walk(left - 1, l - 1, prod / Rational(l));
  };
  walk(depth, m, Rational(1));
  return total;
}

// e_j(1, 1/2, ..., 1/m) read from prod_l (1 + z/l).
std::vector<Rational> elementary_symmetric(int m) {
  std::vector<Rational> e{Rational(1)};
  for (int l = 1; l <= m; ++l) {
    e.push_back(Rational(0));
    for (int j = static_cast<int>(e.size()) - 1; j >= 1; --j) e[j] += e[j - 1] / Rational(l);
  }
  return e;
}

}  // namespace

TEST_CASE("ladder matches chain enumeration for m <= 8") {
  for (int m = 0; m <= 8; ++m)
    for (int j = 0; j <= 9; ++j) CHECK(harmonic_nest(j, m) == chains_brute_force(j, m));
}

TEST_CASE("nest is the elementary symmetric polynomial of reciprocals") {
  for (int m = 0; m <= 15; ++m) {
    const auto e = elementary_symmetric(m);
    for (int j = 0; j <= m; ++j) CHECK(harmonic_nest(j, m) == e[j]);
  }
}

TEST_CASE("empty-sum conventions") {
  CHECK(harmonic_nest(0, 0) == Rational(1));
  CHECK(harmonic_nest(0, 7) == Rational(1));
  CHECK(harmonic_nest(3, 2) == Rational(0));
  CHECK(harmonic_nest(1, 3) == Rational(Integer(11), Integer(6)));
  CHECK(harmonic_nest(2, 2) == Rational(Integer(1), Integer(2)));
}

TEST_CASE("table access and recurrence") {
  const HarmonicNest h2(2, 10), h1(1, 10);
  CHECK(h2.depth() == 2);
  CHECK(h2.m_max() == 10);
  for (int m = 1; m <= 10; ++m) CHECK(h2(m) == h2(m - 1) + h1(m - 1) / Rational(m));
  CHECK_THROWS_AS(h2(11), std::out_of_range);
  CHECK_THROWS_AS(HarmonicNest(-1, 3), std::invalid_argument);
}
