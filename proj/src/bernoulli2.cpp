#include "stirbern/bernoulli2.hpp"

#include "stirbern/harmonic_nest.hpp"

#include <stdexcept>

namespace stirbern {

Rational bernoulli2_qi(const CoeffTable& table, int n) {
  if (n < 0) throw std::invalid_argument("bernoulli2_qi: n must be >= 0");
  if (n == 0) return Rational(1);
  if (n == 1) return Rational(1, 2);
  if (table.n_max() < n) throw std::out_of_range("bernoulli2_qi: coefficient table too small");
  Rational sum(Integer(1), Integer(n + 1));
  Integer kfact = 1;
  for (int k = 2; k <= n; ++k) {
    kfact *= k;
    sum += Rational(table(n, k) - n * table(n - 1, k), kfact);
  }
  return Rational(Integer(sign_power(n)), factorial(n)) * sum;
}

Rational bernoulli2_qi(int n) { return bernoulli2_qi(CoeffTable(n < 1 ? 1 : n), n); }

Rational bernoulli2_nemes(const StirlingTriangle& s, int n) {
  if (n < 0) throw std::invalid_argument("bernoulli2_nemes: n must be >= 0");
  if (s.n_max() < n) throw std::out_of_range("bernoulli2_nemes: triangle too small");
  Rational sum;
  for (int k = 0; k <= n; ++k) sum += Rational(s(n, k), Integer(k + 1));
  return sum / Rational(factorial(n));
}

Rational bernoulli2_nemes(int n) { return bernoulli2_nemes(StirlingTriangle(n < 0 ? 0 : n), n); }

Rational cauchy1(int n) { return Rational(factorial(n)) * bernoulli2_nemes(n); }

Rational reciprocal_factorial(int n) {
  if (n < 1) throw std::invalid_argument("reciprocal_factorial: n must be >= 1");
  return harmonic_nest(n, n);
}

}  // namespace stirbern
