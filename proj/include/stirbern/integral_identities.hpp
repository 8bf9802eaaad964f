#pragma once

#include "stirbern/integer.hpp"
#include "stirbern/quadrature.hpp"
#include "stirbern/stirling.hpp"

#include <vector>

namespace stirbern {

// u (u+1) ... (u+n-1) = Gamma(u+n) / Gamma(u), expanded by direct multiplication.
// coeffs[j] is the coefficient of u^j, i.e. the unsigned Stirling number |s(n,j)|.
class RisingFactorialPoly {
 public:
  explicit RisingFactorialPoly(int n);
  int n() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  double operator()(double u) const;

 private:
  std::vector<Integer> coeffs_;
};

// sum_{i=k-1}^{n} (-1)^(n+i) i! (i+1)! s(n,i) / (i-k+1)!,  1 <= k <= n+1.
Integer thm41_lhs(const StirlingTriangle& s, int n, int k);
Integer thm41_lhs(int n, int k);

// int_0^inf rising_n(u) [sum_l (-1)^l c(k,l) u^(k-l)] e^{-u} du evaluated termwise
// with int_0^inf u^p e^{-u} du = p!.
Integer thm41_rhs_exact(int n, int k);

// Same integral by Gauss-Laguerre. The error estimate is the change against a
// rule with two more nodes; the rule is exact for the polynomial in exact
// arithmetic so only rounding remains.
QuadratureResult thm41_rhs_quadrature(int n, int k, const QuadratureConfig& cfg = {});

// Coefficientwise comparison in t of
//   int_0^inf rising_m(u) e^{-u/t} du = sum_j |s(m,j)| j! t^(j+1)
// against sum_i (-1)^(m+i) i! s(m,i) t^(i+1).
struct GammaStirlingReport {
  int m = 0;
  std::vector<Integer> integral_side;  // coefficient of t^(p+1), p = 0..m
  std::vector<Integer> stirling_side;
  bool ok() const { return integral_side == stirling_side; }
};

GammaStirlingReport gamma_stirling_poly_check(int m);

inline Integer thm42_lhs(const StirlingTriangle& s, int m, int k) { return thm41_lhs(s, m, k); }
inline Integer thm42_lhs(int m, int k) { return thm41_lhs(m, k); }

// m! { lim_{t->1} d^k/dt^k [e^{m/t} / (e^{1/t}-1)^{m+1}]
//      + int_1^inf lim_{t->1} d^k/dt^k [e^{m/t} / (e^{1/t}-1+u)^{m+1}] du / (ln^2(u-1) + pi^2) }
// t-derivatives are jets at t = 1. The integral runs in v with u = 1 + e^v over
// [cfg.v_lo, cfg.v_hi]; both tails decay exponentially and are bounded from the
// integrand at the window edges.
struct Thm42Result {
  double value = 0.0;
  double boundary = 0.0;          // m! times the boundary derivative
  double integral = 0.0;          // m! times the integral over the window
  double quadrature_error = 0.0;  // scaled by m!
  double truncation_bound = 0.0;  // scaled by m!
  QuadratureStatus status = QuadratureStatus::ok;
  bool ok() const { return status == QuadratureStatus::ok; }
};

Thm42Result thm42_rhs(int m, int k, const QuadratureConfig& cfg = {});

// int_0^inf (1+x)^{-u} du, which should equal 1 / ln(1+x).
QuadratureResult inv_log_integral_smoke(double x, const QuadratureConfig& cfg = {});

}  // namespace stirbern
