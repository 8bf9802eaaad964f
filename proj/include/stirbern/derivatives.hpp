#pragma once

#include "stirbern/coeff_table.hpp"
#include "stirbern/integer.hpp"
#include "stirbern/stirling.hpp"

#include <vector>

namespace stirbern {

// Closed-form n-th derivatives of 1/ln x and relatives, evaluated in double,
// next to jet-arithmetic oracles for the same quantities.

// (1/ln x)^(n) = (-1)^n / x^n * sum_{i=2}^{n+1} a(n,i) / (ln x)^i.  x > 0, x != 1.
double inv_log_deriv_qi(const CoeffTable& table, int n, double x);
double inv_log_deriv_qi(int n, double x);

// [1/ln(1+t)]^(m) = (1+t)^(-m) sum_{i=0}^{m} (-1)^i i! s(m,i) / ln(1+t)^(i+1).  t > -1, t != 0.
double inv_log_deriv_prior(const StirlingTriangle& s, int m, double t);
double inv_log_deriv_prior(int m, double t);

// Oracle: n! times the n-th Taylor coefficient of 1/ln(x) built by jet arithmetic.
double inv_log_deriv_jet(int n, double x);

enum class XOverLogVariant { coeff, stirling };

// [x/ln(1+x)]^(i) for i >= 1, x > -1, x != 0. The coefficient form sums
// k = 1..i+1 using a(i-1,i+1) = 0 and a(0,1) = 1; the Stirling form sums
// k = 0..i using s(i-1,i) = 0 and s(0,0) = 1. The k = 1 (resp. k = 0) term
// only survives for i = 1, where it carries the 1/ln(1+x) part.
double x_over_log_deriv(int i, double x, XOverLogVariant variant);
double x_over_log_deriv_jet(int i, double x);

// c(k,l) = C(k,l) C(k-1,l) l!, 0 <= l <= k-1.
class CWeights {
 public:
  explicit CWeights(int k);
  int k() const { return k_; }
  const Integer& operator()(int l) const { return c_.at(l); }
  const std::vector<Integer>& values() const { return c_; }

 private:
  int k_;
  std::vector<Integer> c_;
};

// (e^{-1/t})^(i) = e^{-1/t} t^{-2i} sum_{k=0}^{i-1} (-1)^k c(i,k) t^k.  t != 0, i >= 1.
double exp_recip_deriv(int i, double t);
double exp_recip_deriv_jet(int i, double t);

// Sum of the absolute values of the terms in the closed form; the natural
// error scale where the derivative itself vanishes.
double exp_recip_deriv_scale(int i, double t);

// True when the derivative is exactly zero at t, decided by evaluating the
// polynomial factor in exact rational arithmetic (t = 1/2 for i = 2, say).
bool exp_recip_deriv_vanishes(int i, double t);

}  // namespace stirbern
