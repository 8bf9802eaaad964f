#include "stirbern/verify.hpp"

#include "stirbern/bernoulli2.hpp"
#include "stirbern/coeff_table.hpp"
#include "stirbern/conjecture.hpp"
#include "stirbern/derivatives.hpp"
#include "stirbern/integral_identities.hpp"
#include "stirbern/jet.hpp"
#include "stirbern/series_oracle.hpp"
#include "stirbern/stirling.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace stirbern {

Suite parse_suite(std::string_view s) {
  if (s == "core") return Suite::core;
  if (s == "derivatives") return Suite::derivatives;
  if (s == "thm41") return Suite::thm41;
  if (s == "thm42") return Suite::thm42;
  if (s == "conjecture") return Suite::conjecture;
  if (s == "all") return Suite::all;
  throw std::invalid_argument("unknown suite: " + std::string(s));
}

namespace {

std::string range_str(const char* var, int lo, int hi) {
  return std::to_string(lo) + "<=" + var + "<=" + std::to_string(hi);
}

// Collects exact mismatches; keeps the first one for the report.
class ExactCheck {
 public:
  ExactCheck(std::string name, std::string range) {
    r_.name = std::move(name);
    r_.range = std::move(range);
    r_.exact = true;
  }
  template <typename A, typename B>
  void expect_equal(const A& got, const B& want, const std::string& where) {
    if (got == want) return;
    if (r_.failure.empty()) {
      std::ostringstream os;
      os << where << ": " << got << " != " << want;
      r_.failure = os.str();
    }
    r_.residual += 1.0;
  }
  CheckResult finish() {
    r_.passed = r_.residual == 0.0;
    return r_;
  }

 private:
  CheckResult r_;
};

class RelativeCheck {
 public:
  RelativeCheck(std::string name, std::string range, double tol) {
    r_.name = std::move(name);
    r_.range = std::move(range);
    r_.tolerance = tol;
  }
  void expect_close(double got, double want, const std::string& where) {
    const double rel = std::abs(got - want) / std::max(std::abs(want), 1e-300);
    std::ostringstream os;
    os.precision(17);
    os << where << ": " << got << " vs " << want << " (rel " << rel << ")";
    record(rel, os.str());
  }
  // |diff| <= allowed; use with tolerance 1, the residual is the fraction of the allowance used
  void expect_within(double diff, double allowed, const std::string& where) {
    std::ostringstream os;
    os << where << ": |diff| " << diff << " > " << allowed;
    record(std::abs(diff) / allowed, os.str());
  }
  void record(double residual, const std::string& detail) {
    const bool bad = !(residual <= r_.tolerance);
    if (bad && r_.failure.empty()) r_.failure = detail;
    if (!(residual <= r_.residual)) r_.residual = residual;
    any_bad_ = any_bad_ || bad;
  }
  void fail(const std::string& why) {
    if (r_.failure.empty()) r_.failure = why;
    any_bad_ = true;
  }
  CheckResult finish() {
    r_.passed = !any_bad_;
    return r_;
  }

 private:
  CheckResult r_;
  bool any_bad_ = false;
};

std::string at(std::initializer_list<long> idx) {
  std::string s = "(";
  bool first = true;
  for (long v : idx) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + ")";
}

std::string at_x(int n, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(n=%d,x=%g)", n, x);
  return buf;
}

void core_suite(int N, std::vector<CheckResult>& out) {
  const StirlingTriangle s(N);
  const CoeffTable a(std::max(N, 1));

  ExactCheck product("stirling recursion == product expansion", range_str("k", 0, N) + ",k<=n");
  ExactCheck nested("stirling recursion == nested harmonic sum", range_str("i", 1, N) + ",i<=n");
  ExactCheck series("stirling recursion == series extraction", range_str("m", 0, N) + ",m<=n");
  ExactCheck rowsum("stirling row sums", range_str("n", 0, N));
  for (int n = 0; n <= N; ++n) {
    const auto prod = stirling_from_product(n);
    Integer signed_sum = 0, abs_sum = 0;
    for (int k = 0; k <= n; ++k) {
      product.expect_equal(s(n, k), prod[k], at({n, k}));
      series.expect_equal(s(n, k), stirling_from_series(n, k), at({n, k}));
      if (k >= 1) nested.expect_equal(s(n, k), stirling_from_nested(n, k), at({n, k}));
      signed_sum += s(n, k);
      abs_sum += abs(s(n, k));
    }
    if (n >= 2) rowsum.expect_equal(signed_sum, Integer(0), "sum s(" + std::to_string(n) + ",k)");
    rowsum.expect_equal(abs_sum, factorial(n), "sum |s(" + std::to_string(n) + ",k)|");
  }
  out.push_back(product.finish());
  out.push_back(nested.finish());
  out.push_back(series.finish());
  out.push_back(rowsum.finish());

  ExactCheck link("a(n,i) == (-1)^(n+i-1) (i-1)! s(n,i-1)", range_str("n", 1, N));
  for (int n = 1; n <= N; ++n)
    for (int i = 2; i <= n + 1; ++i) {
      link.expect_equal(a(n, i), a_from_stirling(s, n, i), at({n, i}));
      if (a(n, i).sign() <= 0) link.expect_equal(a(n, i).sign(), 1, "positivity " + at({n, i}));
    }
  out.push_back(link.finish());

  ExactCheck bern("b_n: closed form == Nemes == series", range_str("n", 0, N));
  const auto by_series = bernoulli2_series(N);
  for (int n = 0; n <= N; ++n) {
    const Rational q = bernoulli2_qi(a, n);
    bern.expect_equal(q, bernoulli2_nemes(s, n), "nemes n=" + std::to_string(n));
    bern.expect_equal(q, by_series[n], "series n=" + std::to_string(n));
  }
  out.push_back(bern.finish());

  ExactCheck recip("nested sum == 1/n!", range_str("n", 1, N));
  for (int n = 1; n <= N; ++n)
    recip.expect_equal(reciprocal_factorial(n), Rational(Integer(1), factorial(n)), "n=" + std::to_string(n));
  out.push_back(recip.finish());
}

void derivatives_suite(int N, double tol, std::vector<CheckResult>& out) {
  const CoeffTable a(N);
  const StirlingTriangle s(N);
  const double xs[] = {0.5, 2.0, 10.0};

  RelativeCheck qi("(1/ln x)^(n) closed form vs jet", range_str("n", 1, N) + ",x in {0.5,2,10}", tol);
  RelativeCheck prior("[1/ln(1+t)]^(m) Stirling form vs jet", range_str("m", 0, N) + ",t in {-0.5,1,9}", tol);
  RelativeCheck xcoeff("[x/ln(1+x)]^(i) coefficient form vs jet", range_str("i", 1, N) + ",x in {0.5,2,10}", tol);
  RelativeCheck xstir("[x/ln(1+x)]^(i) Stirling form vs jet", range_str("i", 1, N) + ",x in {0.5,2,10}", tol);
  RelativeCheck erec("(e^{-1/t})^(i) vs jet", range_str("i", 1, N) + ",t in {0.5,1,3}", tol);
  for (double x : xs) {
    for (int n = 0; n <= N; ++n) {
      const double jet = inv_log_deriv_jet(n, x);
      if (n >= 1) qi.expect_close(inv_log_deriv_qi(a, n, x), jet, at_x(n, x));
      prior.expect_close(inv_log_deriv_prior(s, n, x - 1.0), jet, at_x(n, x - 1.0));
      if (n >= 1) {
        const double xj = x_over_log_deriv_jet(n, x);
        xcoeff.expect_close(x_over_log_deriv(n, x, XOverLogVariant::coeff), xj, at_x(n, x));
        xstir.expect_close(x_over_log_deriv(n, x, XOverLogVariant::stirling), xj, at_x(n, x));
      }
    }
  }
  for (double t : {0.5, 1.0, 3.0})
    for (int i = 1; i <= N; ++i) {
      const double got = exp_recip_deriv(i, t), jet = exp_recip_deriv_jet(i, t);
      if (exp_recip_deriv_vanishes(i, t)) {
        // relative error is undefined at an exact zero; measure against the term scale
        const double scale = exp_recip_deriv_scale(i, t);
        erec.record(std::max(std::abs(got), std::abs(jet)) / scale, at_x(i, t) + ": exact zero missed");
      } else {
        erec.expect_close(got, jet, at_x(i, t));
      }
    }

  RelativeCheck selftest("jet ln x vs (-1)^(n-1)(n-1)!/x^n", range_str("n", 1, N), 1e-12);
  for (double x : xs) {
    const auto l = log(Jet<double>::variable(N, x));
    for (int n = 1; n <= N; ++n)
      selftest.expect_close(l.derivative(n), (n % 2 == 1 ? 1.0 : -1.0) * static_cast<double>(factorial(n - 1)) / std::pow(x, n),
                            at_x(n, x));
  }
  out.push_back(qi.finish());
  out.push_back(prior.finish());
  out.push_back(xcoeff.finish());
  out.push_back(xstir.finish());
  out.push_back(erec.finish());
  out.push_back(selftest.finish());
}

void thm41_suite(int N, double tol, std::vector<CheckResult>& out) {
  const StirlingTriangle s(N);
  ExactCheck exact("gamma integral identity, exact", range_str("n", 1, N) + ",1<=k<=n+1");
  for (int n = 1; n <= N; ++n)
    for (int k = 1; k <= n + 1; ++k) exact.expect_equal(thm41_lhs(s, n, k), thm41_rhs_exact(n, k), at({n, k}));
  out.push_back(exact.finish());

  const int Nq = std::min(N, 8);
  RelativeCheck quad("gamma integral identity, Gauss-Laguerre", range_str("n", 1, Nq) + ",1<=k<=n+1", tol);
  QuadratureConfig cfg;
  cfg.rel_tol = tol;
  for (int n = 1; n <= Nq; ++n)
    for (int k = 1; k <= n + 1; ++k) {
      const auto q = thm41_rhs_quadrature(n, k, cfg);
      if (!q.ok()) quad.fail(at({n, k}) + ": quadrature " + to_string(q.status));
      quad.expect_close(q.value, static_cast<double>(thm41_lhs(s, n, k)), at({n, k}));
    }
  out.push_back(quad.finish());

  ExactCheck poly("int rising(u) e^{-u/t} du coefficients", range_str("m", 1, N + 3));
  for (int m = 1; m <= N + 3; ++m) {
    const auto rep = gamma_stirling_poly_check(m);
    for (int p = 0; p <= m; ++p)
      poly.expect_equal(rep.integral_side[p], rep.stirling_side[p], "m=" + std::to_string(m) + " t^" + std::to_string(p + 1));
  }
  out.push_back(poly.finish());

  RelativeCheck smoke("int_0^inf (1+x)^{-u} du == 1/ln(1+x)", "x in {1,e-1,9}", 1e-8);
  for (double x : {1.0, std::exp(1.0) - 1.0, 9.0}) {
    const auto q = inv_log_integral_smoke(x);
    if (!q.ok()) smoke.fail("x=" + std::to_string(x) + ": quadrature " + to_string(q.status));
    smoke.expect_close(q.value, 1.0 / std::log1p(x), "x=" + std::to_string(x));
  }
  out.push_back(smoke.finish());
}

void thm42_suite(int N, double tol, std::vector<CheckResult>& out) {
  const StirlingTriangle s(N);
  RelativeCheck check("Cauchy-kernel integral identity", range_str("m", 1, N) + ",1<=k<=m+1", tol);
  RelativeCheck window("window [-30,30] vs [-40,40], |diff| / tail bound", range_str("m", 1, N), 1.0);
  QuadratureConfig narrow;
  QuadratureConfig wide;
  wide.v_lo = -40.0;
  wide.v_hi = 40.0;
  for (int m = 1; m <= N; ++m)
    for (int k = 1; k <= m + 1; ++k) {
      const auto r = thm42_rhs(m, k, narrow);
      if (!r.ok()) check.fail(at({m, k}) + ": quadrature " + to_string(r.status));
      check.expect_close(r.value, static_cast<double>(thm42_lhs(s, m, k)), at({m, k}));

      const auto w = thm42_rhs(m, k, wide);
      const double allowed = r.truncation_bound + r.quadrature_error + w.quadrature_error;
      window.expect_within(w.integral - r.integral, allowed, at({m, k}));
    }
  out.push_back(check.finish());
  out.push_back(window.finish());
}

void conjecture_suite(int N, std::vector<CheckResult>& out) {
  const auto rep = conjecture_check(N);
  CheckResult mono{"a(n+1,i) >= a(n,i)", range_str("n", 1, N), true, 0.0, 0.0, false, {}};
  mono.range += " (ties: " + std::to_string(rep.monotonicity_ties.size()) + ")";
  mono.residual = static_cast<double>(rep.monotonicity_violations.size());
  mono.passed = rep.monotonicity_violations.empty();
  if (!mono.passed) {
    auto [n, i] = rep.monotonicity_violations.front();
    mono.failure = "a(n+1,i) < a(n,i) at " + at({n, i});
  }
  out.push_back(mono);

  CheckResult uni{"i -> a(n,i) unimodal", range_str("n", 1, N), true, 0.0, 0.0, false, {}};
  uni.range += " (plateau rows: " + std::to_string(rep.plateau_rows.size()) + ")";
  uni.residual = static_cast<double>(rep.unimodality_violations.size());
  uni.passed = rep.unimodality_violations.empty();
  if (!uni.passed) uni.failure = "row n=" + std::to_string(rep.unimodality_violations.front());
  out.push_back(uni);
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  auto pick = [&](int def) { return opts.n_max.value_or(def); };
  auto tol = [&](double def) { return opts.tol.value_or(def); };
  const bool all = suite == Suite::all;
  if (opts.n_max && *opts.n_max < 1) throw std::invalid_argument("verify: --n-max must be >= 1");
  if (opts.tol && !(*opts.tol > 0.0)) throw std::invalid_argument("verify: --tol must be positive");
  if (all || suite == Suite::core) core_suite(pick(25), out);
  if (all || suite == Suite::derivatives) derivatives_suite(pick(8), tol(1e-9), out);
  if (all || suite == Suite::thm41) thm41_suite(pick(12), tol(1e-8), out);
  if (all || suite == Suite::thm42) thm42_suite(pick(5), tol(1e-5), out);
  if (all || suite == Suite::conjecture) conjecture_suite(std::max(pick(40), 2), out);
  return out;
}

std::string render_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    char resid[64];
    if (r.exact)
      std::snprintf(resid, sizeof resid, "mismatches=%.0f", r.residual);
    else
      std::snprintf(resid, sizeof resid, "max_rel=%.3e tol=%.1e", r.residual, r.tolerance);
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.range << "]  " << resid;
    if (!r.failure.empty()) os << "  first failure: " << r.failure;
    os << '\n';
  }
  return os.str();
}

std::string render_report_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["kind"] = "verify-report";
    j["name"] = r.name;
    j["range"] = r.range;
    j["exact"] = r.exact;
    j["residual"] = r.residual;
    if (!r.exact) j["tolerance"] = r.tolerance;
    j["status"] = r.passed ? "ok" : "mismatch";
    if (!r.failure.empty()) j["failure"] = r.failure;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace stirbern
