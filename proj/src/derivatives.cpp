#include "stirbern/derivatives.hpp"

#include "stirbern/jet.hpp"
#include "stirbern/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace stirbern {

namespace {

void require_log_domain(double x) {
  if (!(x > 0.0) || x == 1.0) throw std::domain_error("1/ln x needs x > 0 and x != 1");
}

void require_log1p_domain(double t) {
  if (!(t > -1.0) || t == 0.0) throw std::domain_error("1/ln(1+t) needs t > -1 and t != 0");
}

double to_double(const Integer& v) { return static_cast<double>(v); }

}  // namespace

double inv_log_deriv_qi(const CoeffTable& table, int n, double x) {
  require_log_domain(x);
  if (n < 1 || n > table.n_max()) throw std::out_of_range("inv_log_deriv_qi: n outside table");
  const double y = 1.0 / std::log(x);
  // Horner in y over i = n+1 .. 2, then the remaining factor y^2
  double acc = 0.0;
  for (int i = n + 1; i >= 2; --i) acc = acc * y + to_double(table(n, i));
  return (n % 2 == 0 ? 1.0 : -1.0) * acc * y * y / std::pow(x, n);
}

double inv_log_deriv_qi(int n, double x) { return inv_log_deriv_qi(CoeffTable(n < 1 ? 1 : n), n, x); }

double inv_log_deriv_prior(const StirlingTriangle& s, int m, double t) {
  require_log1p_domain(t);
  if (m < 0 || m > s.n_max()) throw std::out_of_range("inv_log_deriv_prior: m outside triangle");
  const double y = 1.0 / std::log1p(t);
  double acc = 0.0;
  for (int i = m; i >= 0; --i)
    acc = acc * y + (i % 2 == 0 ? 1.0 : -1.0) * to_double(factorial(i) * s(m, i));
  return acc * y / std::pow(1.0 + t, m);
}

double inv_log_deriv_prior(int m, double t) {
  return inv_log_deriv_prior(StirlingTriangle(m < 0 ? 0 : m), m, t);
}

double inv_log_deriv_jet(int n, double x) {
  require_log_domain(x);
  if (n < 0) throw std::invalid_argument("inv_log_deriv_jet: n must be >= 0");
  const auto v = Jet<double>::variable(n, x);
  return (1.0 / log(v)).derivative(n);
}

double x_over_log_deriv(int i, double x, XOverLogVariant variant) {
  require_log1p_domain(x);
  if (i < 1) throw std::invalid_argument("x_over_log_deriv: i must be >= 1");
  const double y = 1.0 / std::log1p(x);
  double acc = 0.0;
  if (variant == XOverLogVariant::coeff) {
    const CoeffTable a(i);
    for (int k = i + 1; k >= 1; --k)
      acc = acc * y + (x * to_double(a(i, k)) - i * (1.0 + x) * to_double(a(i - 1, k)));
  } else {
    const StirlingTriangle s(i);
    for (int k = i; k >= 0; --k) {
      const double term = x * to_double(s(i, k)) + i * (1.0 + x) * to_double(s(i - 1, k));
      acc = acc * y + ((i + k) % 2 == 0 ? 1.0 : -1.0) * to_double(factorial(k)) * term;
    }
  }
  return (i % 2 == 0 ? 1.0 : -1.0) * acc * y / std::pow(1.0 + x, i);
}

double x_over_log_deriv_jet(int i, double x) {
  require_log1p_domain(x);
  if (i < 0) throw std::invalid_argument("x_over_log_deriv_jet: i must be >= 0");
  const auto v = Jet<double>::variable(i, x);
  return (v / log(v + 1.0)).derivative(i);
}

CWeights::CWeights(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("CWeights: k must be >= 1");
  c_.reserve(k);
  for (int l = 0; l < k; ++l) c_.push_back(binomial(k, l) * binomial(k - 1, l) * factorial(l));
}

double exp_recip_deriv(int i, double t) {
  if (t == 0.0) throw std::domain_error("exp_recip_deriv: t must be nonzero");
  const CWeights c(i);
  double acc = 0.0;
  for (int k = i - 1; k >= 0; --k) acc = acc * t + (k % 2 == 0 ? 1.0 : -1.0) * to_double(c(k));
  return std::exp(-1.0 / t) * acc / std::pow(t, 2 * i);
}

double exp_recip_deriv_scale(int i, double t) {
  if (t == 0.0) throw std::domain_error("exp_recip_deriv_scale: t must be nonzero");
  const CWeights c(i);
  double acc = 0.0;
  for (int k = i - 1; k >= 0; --k) acc = acc * std::abs(t) + to_double(c(k));
  return std::exp(-1.0 / t) * acc / std::pow(t, 2 * i);
}

bool exp_recip_deriv_vanishes(int i, double t) {
  if (t == 0.0) throw std::domain_error("exp_recip_deriv_vanishes: t must be nonzero");
  int exponent = 0;
  const double mantissa = std::frexp(t, &exponent);
  // t = m 2^(e-53) with m an integer
  const Integer m(static_cast<long long>(std::ldexp(mantissa, 53)));
  const int shift = exponent - 53;
  const Rational tq = shift >= 0 ? Rational(m << shift) : Rational(m, Integer(1) << -shift);
  const CWeights c(i);
  Rational acc;
  for (int k = i - 1; k >= 0; --k) acc = acc * tq + Rational(sign_power(k) * c(k));
  return acc.is_zero();
}

double exp_recip_deriv_jet(int i, double t) {
  if (t == 0.0) throw std::domain_error("exp_recip_deriv_jet: t must be nonzero");
  if (i < 0) throw std::invalid_argument("exp_recip_deriv_jet: i must be >= 0");
  const auto v = Jet<double>::variable(i, t);
  return exp(-(1.0 / v)).derivative(i);
}

}  // namespace stirbern
