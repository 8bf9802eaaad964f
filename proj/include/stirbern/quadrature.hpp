#pragma once

#include <Eigen/Core>

#include <functional>
#include <string>

namespace stirbern {

struct QuadratureConfig {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_subdivisions = 4000;
  // Truncation window for integrals mapped onto the real line.
  double v_lo = -30.0;
  double v_hi = 30.0;

  // Throws std::invalid_argument when tolerances are not positive or the window is empty.
  void validate() const;
};

enum class QuadratureStatus { ok, not_converged, truncation };

std::string to_string(QuadratureStatus s);

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  int subdivisions = 0;
  QuadratureStatus status = QuadratureStatus::ok;

  bool ok() const { return status == QuadratureStatus::ok; }
};

// Nodes and weights of the n-point rule for int_0^inf f(u) e^{-u} du,
// exact for polynomials of degree <= 2n-1.
struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

GaussRule gauss_laguerre(int n);

double integrate(const GaussRule& rule, const std::function<double(double)>& f);

// Globally adaptive 15-point Gauss-Kronrod on [a, b].
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureConfig& cfg);

// int_a^inf f(u) du through u = a + s / (1 - s), s in [0, 1).
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double a,
                                         const QuadratureConfig& cfg);

}  // namespace stirbern
