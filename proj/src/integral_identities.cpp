#include "stirbern/integral_identities.hpp"

#include "stirbern/derivatives.hpp"
#include "stirbern/jet.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stirbern {

namespace {

void require_thm_range(int n, int k) {
  if (n < 1 || k < 1 || k > n + 1) throw std::invalid_argument("need n >= 1 and 1 <= k <= n+1");
}

// sum_l (-1)^l c(k,l) u^(k-l) as ascending coefficients in u.
std::vector<Integer> limit_kernel_poly(int k) {
  const CWeights c(k);
  std::vector<Integer> poly(k + 1);
  for (int l = 0; l < k; ++l) poly[k - l] = sign_power(l) * c(l);
  return poly;
}

double horner(const std::vector<double>& coeffs, double u) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
  return acc;
}

}  // namespace

RisingFactorialPoly::RisingFactorialPoly(int n) {
  if (n < 0) throw std::invalid_argument("RisingFactorialPoly: n must be >= 0");
  coeffs_ = {Integer(1)};
  for (int j = 0; j < n; ++j) {
    // multiply by (u + j)
    std::vector<Integer> next(coeffs_.size() + 1);
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
      next[d + 1] += coeffs_[d];
      next[d] += j * coeffs_[d];
    }
    coeffs_ = std::move(next);
  }
}

double RisingFactorialPoly::operator()(double u) const {
  double acc = 1.0;
  for (int j = 0; j < n(); ++j) acc *= (u + j);
  return acc;
}

Integer thm41_lhs(const StirlingTriangle& s, int n, int k) {
  require_thm_range(n, k);
  Integer sum = 0;
  for (int i = k - 1; i <= n; ++i)
    sum += sign_power(n + i) * factorial(i) * falling_factorial(i + 1, k) * s(n, i);
  return sum;
}

Integer thm41_lhs(int n, int k) { return thm41_lhs(StirlingTriangle(n), n, k); }

Integer thm41_rhs_exact(int n, int k) {
  require_thm_range(n, k);
  const RisingFactorialPoly rising(n);
  const auto kernel = limit_kernel_poly(k);
  Integer sum = 0;
  for (int p = 0; p <= k; ++p) {
    if (kernel[p] == 0) continue;
    for (int j = 0; j <= n; ++j) {
      if (rising.coeffs()[j] == 0) continue;
      sum += kernel[p] * rising.coeffs()[j] * factorial(j + p);
    }
  }
  return sum;
}

QuadratureResult thm41_rhs_quadrature(int n, int k, const QuadratureConfig& cfg) {
  require_thm_range(n, k);
  cfg.validate();
  const RisingFactorialPoly rising(n);
  std::vector<double> kernel;
  for (const auto& c : limit_kernel_poly(k)) kernel.push_back(static_cast<double>(c));
  auto integrand = [&](double u) { return rising(u) * horner(kernel, u); };

  const int degree = n + k;
  const int nodes = degree / 2 + 1;
  const double coarse = integrate(gauss_laguerre(nodes), integrand);
  const double fine = integrate(gauss_laguerre(nodes + 2), integrand);
  QuadratureResult r;
  r.value = fine;
  r.error = std::abs(fine - coarse);
  if (r.error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(fine)))
    r.status = QuadratureStatus::not_converged;
  return r;
}

GammaStirlingReport gamma_stirling_poly_check(int m) {
  if (m < 1) throw std::invalid_argument("gamma_stirling_poly_check: m must be >= 1");
  const RisingFactorialPoly rising(m);
  const StirlingTriangle s(m);
  GammaStirlingReport rep;
  rep.m = m;
  for (int p = 0; p <= m; ++p) {
    rep.integral_side.push_back(rising.coeffs()[p] * factorial(p));
    rep.stirling_side.push_back(sign_power(m + p) * factorial(p) * s(m, p));
  }
  return rep;
}

Thm42Result thm42_rhs(int m, int k, const QuadratureConfig& cfg) {
  require_thm_range(m, k);
  cfg.validate();
  using J = Jet<double>;
  constexpr double pi = boost::math::constants::pi<double>();

  const J t = J::variable(k, 1.0);
  const J recip = 1.0 / t;
  const J numer = exp(recip * static_cast<double>(m));
  const J e_recip = exp(recip);

  const double boundary = (numer * pow(e_recip - 1.0, -(m + 1))).derivative(k);

  // u = 1 + e^v:  e^{1/t} - 1 + u = e^{1/t} + e^v
  auto integrand = [&](double v) {
    const double ev = std::exp(v);
    const double d = (numer * pow(e_recip + ev, -(m + 1))).derivative(k);
    return ev / (v * v + pi * pi) * d;
  };
  const QuadratureResult q = integrate_adaptive(integrand, cfg.v_lo, cfg.v_hi, cfg);

  // Left tail behaves like C e^{v}, right tail like C e^{-m v}.
  const double lo_tail =
      2.0 * std::max(std::abs(integrand(cfg.v_lo)), std::abs(integrand(cfg.v_lo + 1.0)) * std::exp(-1.0));
  const double hi_tail =
      2.0 * std::max(std::abs(integrand(cfg.v_hi)), std::abs(integrand(cfg.v_hi - 1.0)) * std::exp(-m)) / m;

  const double mfact = static_cast<double>(factorial(m));
  Thm42Result r;
  r.boundary = mfact * boundary;
  r.integral = mfact * q.value;
  r.value = r.boundary + r.integral;
  r.quadrature_error = mfact * q.error;
  r.truncation_bound = mfact * (lo_tail + hi_tail);
  r.status = q.status;
  if (r.ok() && r.truncation_bound > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r.value)))
    r.status = QuadratureStatus::truncation;
  return r;
}

QuadratureResult inv_log_integral_smoke(double x, const QuadratureConfig& cfg) {
  if (!(x > 0.0)) throw std::domain_error("inv_log_integral_smoke: x must be > 0");
  const double base = 1.0 + x;
  return integrate_semi_infinite([base](double u) { return std::pow(base, -u); }, 0.0, cfg);
}

}  // namespace stirbern
