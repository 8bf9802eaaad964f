// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "stirbern/bernoulli2.hpp"
#include "stirbern/coeff_table.hpp"
#include "stirbern/conjecture.hpp"
#include "stirbern/derivatives.hpp"
#include "stirbern/integral_identities.hpp"
#include "stirbern/series_oracle.hpp"
#include "stirbern/stirling.hpp"

#include "table1.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

using namespace stirbern;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string idx(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

Outcome table_reproduction() {
  Outcome o;
  const CoeffTable a(11);
  int count = 0;
  const auto& rows = published_coefficients();
  for (int n = 1; n <= 11; ++n)
    for (std::size_t j = 0; j < rows[n - 1].size(); ++j, ++count)
      if (a(n, static_cast<int>(j) + 2) != rows[n - 1][j]) o.fail("a" + idx(n, static_cast<int>(j) + 2));
  if (a(4, 3) != 22 || a(9, 7) != 3265920 || a(11, 10) != 479001600 || a(11, 11) != 199584000)
    o.fail("named entries");
  o.detail += std::to_string(count) + " entries";
  return o;
}

Outcome bernoulli_constants() {
  Outcome o;
  const Rational want[] = {Rational(1), Rational(Integer(1), Integer(2)), Rational(Integer(-1), Integer(12)),
                           Rational(Integer(1), Integer(24)), Rational(Integer(-19), Integer(720)),
                           Rational(Integer(3), Integer(160))};
  const auto series = bernoulli2_series(5);
  for (int n = 0; n <= 5; ++n) {
    if (bernoulli2_qi(n) != want[n]) o.fail("closed form n=" + std::to_string(n));
    if (bernoulli2_nemes(n) != want[n]) o.fail("Nemes n=" + std::to_string(n));
    if (series[n] != want[n]) o.fail("series n=" + std::to_string(n));
  }
  return o;
}

Outcome bernoulli_cross_method() {
  Outcome o;
  const int N = 30;
  const CoeffTable a(N);
  const StirlingTriangle s(N);
  const auto series = bernoulli2_series(N);
  for (int n = 0; n <= N; ++n) {
    const Rational q = bernoulli2_qi(a, n);
    if (q != bernoulli2_nemes(s, n) || q != series[n]) o.fail("n=" + std::to_string(n));
  }
  return o;
}

Outcome stirling_routes() {
  Outcome o;
  const int N = 25;
  const StirlingTriangle s(N);
  for (int n = 0; n <= N; ++n) {
    const auto prod = stirling_from_product(n);
    for (int k = 0; k <= n; ++k) {
      if (s(n, k) != prod[k]) o.fail("product " + idx(n, k));
      if (s(n, k) != stirling_from_series(n, k)) o.fail("series " + idx(n, k));
      if (k >= 1 && s(n, k) != stirling_from_nested(n, k)) o.fail("nested " + idx(n, k));
    }
  }
  return o;
}

Outcome coefficient_link() {
  Outcome o;
  const int N = 60;
  const CoeffTable a(N);
  const StirlingTriangle s(N);
  for (int n = 1; n <= N; ++n)
    for (int i = 2; i <= n + 1; ++i)
      if (a(n, i) != sign_power(n + i - 1) * factorial(i - 1) * s(n, i - 1)) o.fail(idx(n, i));
  return o;
}

Outcome factorial_identity() {
  Outcome o;
  for (int n = 1; n <= 20; ++n)
    if (reciprocal_factorial(n) != Rational(Integer(1), factorial(n))) o.fail("n=" + std::to_string(n));
  return o;
}

Outcome gamma_integral_identity() {
  Outcome o;
  const StirlingTriangle s(12);
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= n + 1; ++k)
      if (thm41_lhs(s, n, k) != thm41_rhs_exact(n, k)) o.fail("exact " + idx(n, k));
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n + 1; ++k) {
      const auto q = thm41_rhs_quadrature(n, k);
      const double r = rel(q.value, static_cast<double>(thm41_lhs(s, n, k)));
      worst = std::max(worst, r);
      if (!(r <= 1e-8)) o.fail("quadrature " + idx(n, k));
    }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%squadrature max rel %.2e", o.pass ? "" : "; ", worst);
  o.detail += buf;
  return o;
}

Outcome cauchy_kernel_identity() {
  Outcome o;
  double worst = 0.0;
  for (int m = 1; m <= 5; ++m)
    for (int k = 1; k <= m + 1; ++k) {
      const auto r = thm42_rhs(m, k);
      const double e = rel(r.value, static_cast<double>(thm42_lhs(m, k)));
      worst = std::max(worst, e);
      if (!r.ok()) o.fail(idx(m, k) + " quadrature " + to_string(r.status));
      if (!(e <= 1e-5)) o.fail(idx(m, k));
    }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%smax rel %.2e", o.pass ? "" : "; ", worst);
  o.detail += buf;
  return o;
}

Outcome derivative_formulas() {
  Outcome o;
  const int N = 8;
  const double tol = 1e-9;
  const CoeffTable a(N);
  const StirlingTriangle s(N);
  double worst = 0.0;
  auto check = [&](double got, double want, const std::string& what) {
    const double r = rel(got, want);
    worst = std::max(worst, r);
    if (!(r <= tol)) o.fail(what);
  };
  for (double x : {0.5, 2.0, 10.0})
    for (int n = 1; n <= N; ++n) {
      const std::string at = idx(n, static_cast<int>(x * 10)) + "/10";
      const double jet = inv_log_deriv_jet(n, x);
      check(inv_log_deriv_qi(a, n, x), jet, "closed form " + at);
      check(inv_log_deriv_prior(s, n, x - 1.0), jet, "prior form " + at);
      const double xj = x_over_log_deriv_jet(n, x);
      check(x_over_log_deriv(n, x, XOverLogVariant::coeff), xj, "x/ln coeff " + at);
      check(x_over_log_deriv(n, x, XOverLogVariant::stirling), xj, "x/ln stirling " + at);
    }
  for (double t : {0.5, 1.0, 3.0})
    for (int i = 1; i <= N; ++i) {
      const std::string at = "exp(-1/t) i=" + std::to_string(i) + " t=" + std::to_string(t);
      const double got = exp_recip_deriv(i, t), jet = exp_recip_deriv_jet(i, t);
      if (exp_recip_deriv_vanishes(i, t)) {
        // exact zero: both routes must vanish relative to the size of the terms
        const double scale = exp_recip_deriv_scale(i, t);
        const double r = std::max(std::abs(got), std::abs(jet)) / scale;
        worst = std::max(worst, r);
        if (!(r <= tol)) o.fail(at);
      } else {
        check(got, jet, at);
      }
    }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%smax rel %.2e", o.pass ? "" : "; ", worst);
  o.detail += buf;
  return o;
}

Outcome conjecture_scan() {
  Outcome o;
  const auto rep = conjecture_check(40);
  if (!rep.monotonicity_violations.empty()) o.fail("monotonicity, first at n=" + std::to_string(rep.monotonicity_violations[0].first));
  if (!rep.unimodality_violations.empty()) o.fail("unimodality, first row " + std::to_string(rep.unimodality_violations[0]));
  o.detail += (o.pass ? "" : "; ") + std::to_string(rep.monotonicity_ties.size()) + " tie(s) in n, " +
              std::to_string(rep.plateau_rows.size()) + " plateau row(s)";
  return o;
}

Outcome row_sums() {
  Outcome o;
  const StirlingTriangle s(40);
  for (int n = 0; n <= 40; ++n) {
    Integer sum = 0, abs_sum = 0;
    for (const auto& v : s.row(n)) {
      sum += v;
      abs_sum += abs(v);
    }
    if (n >= 2 && sum != 0) o.fail("signed n=" + std::to_string(n));
    if (abs_sum != factorial(n)) o.fail("unsigned n=" + std::to_string(n));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"C1  coefficient table n<=11 reproduced exactly", table_reproduction},
      {"C2  b_0..b_5 by all three routes", bernoulli_constants},
      {"C3  b_n closed form == Nemes == series, n<=30", bernoulli_cross_method},
      {"C4  s(n,k) recursion/product/nested/series, n<=25", stirling_routes},
      {"C5  a(n,i) == (-1)^(n+i-1)(i-1)! s(n,i-1), n<=60", coefficient_link},
      {"C6  nested sum == 1/n!, n<=20", factorial_identity},
      {"C7  gamma-integral identity exact n<=12, quadrature rel<=1e-8 n<=8", gamma_integral_identity},
      {"C8  Cauchy-kernel identity rel<=1e-5, m<=5", cauchy_kernel_identity},
      {"C9  derivative formulas vs jets rel<=1e-9, order<=8", derivative_formulas},
      {"C10 monotone in n, unimodal in i, n<=40", conjecture_scan},
      {"C11 sum s(n,k)=0 (n>=2), sum |s(n,k)|=n!, n<=40", row_sums},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s%s%s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.empty() ? "" : "  -- ", o.detail.c_str());
    if (!o.pass) ++failed;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2fs\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria), secs);
  return failed == 0 ? 0 : 1;
}
