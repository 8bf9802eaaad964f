#include "stirbern/integer.hpp"
#include "stirbern/quadrature.hpp"

#include <doctest.h>

#include <cmath>

using namespace stirbern;

TEST_CASE("Gauss-Laguerre integrates u^p e^{-u} exactly up to degree 2n-1") {
  for (int n : {1, 3, 8, 15}) {
    const auto rule = gauss_laguerre(n);
    REQUIRE(rule.nodes.size() == n);
    CHECK(rule.weights.sum() == doctest::Approx(1.0).epsilon(1e-14));
    for (int i = 0; i < n; ++i) CHECK(rule.weights(i) > 0.0);
    for (int p = 0; p <= 2 * n - 1; ++p) {
      CAPTURE(n);
      CAPTURE(p);
      const double got = integrate(rule, [p](double u) { return std::pow(u, p); });
      const double want = static_cast<double>(factorial(p));
      CHECK(std::abs(got - want) / want <= 1e-12);
    }
  }
  CHECK_THROWS_AS(gauss_laguerre(0), std::invalid_argument);
}

TEST_CASE("adaptive Gauss-Kronrod") {
  const QuadratureConfig cfg;
  const auto r = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, M_PI, cfg);
  CHECK(r.ok());
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-14));

  // integrable endpoint singularity needs many subdivisions
  const auto s = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, cfg);
  CHECK(s.ok());
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-10));

  QuadratureConfig tight = cfg;
  tight.max_subdivisions = 2;
  const auto f = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, tight);
  CHECK(f.status == QuadratureStatus::not_converged);
  CHECK(to_string(f.status) == "not-converged");
}

TEST_CASE("semi-infinite mapping") {
  const auto r = integrate_semi_infinite([](double u) { return std::exp(-u); }, 0.0, QuadratureConfig{});
  CHECK(r.ok());
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  const auto g = integrate_semi_infinite([](double u) { return 1.0 / (1.0 + u * u); }, 0.0, QuadratureConfig{});
  CHECK(g.value == doctest::Approx(M_PI / 2).epsilon(1e-11));
}

TEST_CASE("config validation") {
  QuadratureConfig c;
  CHECK_NOTHROW(c.validate());
  c.abs_tol = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.v_lo = 5.0;
  c.v_hi = 5.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = {};
  c.max_subdivisions = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}
