#include "stirbern/series_oracle.hpp"

#include <stdexcept>

namespace stirbern {

RationalSeries log1p_series(int order) {
  if (order < 1) throw std::invalid_argument("log1p_series: order must be >= 1");
  RationalSeries s(order);
  for (int k = 1; k <= order; ++k) s[k] = Rational(Integer(sign_power(k - 1)), Integer(k));
  return s;
}

Integer stirling_from_series(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("stirling_from_series: need 0 <= m <= n");
  const RationalSeries l = log1p_series(n < 1 ? 1 : n);
  const Rational c = pow(l, m)[n] * Rational(factorial(n), factorial(m));
  if (!c.is_integer()) throw std::logic_error("stirling_from_series: non-integer coefficient");
  return c.num();
}

std::vector<Rational> bernoulli2_series(int n_max) {
  if (n_max < 0) throw std::invalid_argument("bernoulli2_series: n_max must be >= 0");
  // ln(1+x)/x, constant term 1
  RationalSeries q(n_max);
  for (int k = 0; k <= n_max; ++k) q[k] = Rational(Integer(sign_power(k)), Integer(k + 1));
  return reciprocal(q).coeffs();
}

}  // namespace stirbern
