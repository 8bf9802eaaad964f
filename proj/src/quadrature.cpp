#include "stirbern/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace stirbern {

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw std::invalid_argument("QuadratureConfig: tolerances must be positive");
  if (max_subdivisions < 1) throw std::invalid_argument("QuadratureConfig: max_subdivisions < 1");
  if (!(v_lo < v_hi)) throw std::invalid_argument("QuadratureConfig: need v_lo < v_hi");
}

std::string to_string(QuadratureStatus s) {
  switch (s) {
    case QuadratureStatus::ok: return "ok";
    case QuadratureStatus::not_converged: return "not-converged";
    case QuadratureStatus::truncation: return "truncation";
  }
  return "unknown";
}

namespace {

// L_n(x) and L_{n-1}(x) by the three-term recurrence.
std::pair<double, double> laguerre_pair(int n, double x) {
  double prev = 1.0, cur = 1.0 - x;
  if (n == 0) return {prev, 0.0};
  for (int k = 1; k < n; ++k) {
    double next = ((2 * k + 1 - x) * cur - k * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

}  // namespace

GaussRule gauss_laguerre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
  // Golub-Welsch: Jacobi matrix with diagonal 2k+1 and off-diagonal k.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    jacobi(k, k) = 2.0 * k + 1.0;
    if (k + 1 < n) jacobi(k, k + 1) = jacobi(k + 1, k) = k + 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  GaussRule rule{solver.eigenvalues(), Eigen::VectorXd(n)};

  for (int i = 0; i < n; ++i) {
    double& x = rule.nodes(i);
    // Newton polish on L_n; L_n'(x) = n (L_n - L_{n-1}) / x
    for (int it = 0; it < 8; ++it) {
      auto [ln, lm] = laguerre_pair(n, x);
      const double d = n * (ln - lm) / x;
      const double step = ln / d;
      x -= step;
      if (std::abs(step) <= 1e-16 * x) break;
    }
    // w = x / ((n+1)^2 L_{n+1}(x)^2) keeps full relative accuracy for tiny weights.
    const double l_next = laguerre_pair(n + 1, x).first;
    rule.weights(i) = x / ((n + 1.0) * (n + 1.0) * l_next * l_next);
  }
  return rule;
}

double integrate(const GaussRule& rule, const std::function<double(double)>& f) {
  double acc = 0.0;
  for (Eigen::Index i = rule.nodes.size() - 1; i >= 0; --i) acc += rule.weights(i) * f(rule.nodes(i));
  return acc;
}

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * fsum;
    if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureConfig& cfg) {
  cfg.validate();
  std::priority_queue<Segment> heap;
  heap.push(kronrod15(f, a, b));
  double total = heap.top().value;
  double error = heap.top().error;
  int subdivisions = 0;
  while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
    if (subdivisions >= cfg.max_subdivisions)
      return {total, error, subdivisions, QuadratureStatus::not_converged};
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = kronrod15(f, worst.a, mid);
    Segment right = kronrod15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }
  // Re-sum to shed the drift of the incremental updates.
  total = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  return {total, error, subdivisions, QuadratureStatus::ok};
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double a,
                                         const QuadratureConfig& cfg) {
  auto mapped = [&](double s) {
    const double one_minus = 1.0 - s;
    return f(a + s / one_minus) / (one_minus * one_minus);
  };
  return integrate_adaptive(mapped, 0.0, 1.0, cfg);
}

}  // namespace stirbern
