#pragma once

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>

namespace stirbern {

// Truncated Taylor expansion f(x0 + h) = sum_{k<=K} c_k h^k. The k-th
// derivative at x0 is k! c_k. All operations are exact truncated algebra.
template <typename Scalar>
class Jet {
 public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Jet(int order, Scalar point) : point_(point), c_(Coeffs::Zero(order + 1)) {
    if (order < 0) throw std::invalid_argument("Jet: negative order");
  }

  static Jet constant(int order, Scalar point, Scalar value) {
    Jet j(order, point);
    j.c_(0) = value;
    return j;
  }

  // The independent variable x at x0.
  static Jet variable(int order, Scalar point) {
    Jet j(order, point);
    j.c_(0) = point;
    if (order >= 1) j.c_(1) = Scalar(1);
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  Scalar point() const { return point_; }
  const Coeffs& coeffs() const { return c_; }
  Coeffs& coeffs() { return c_; }
  Scalar operator[](int k) const { return c_(k); }
  Scalar& operator[](int k) { return c_(k); }

  Scalar value() const { return c_(0); }

  Scalar derivative(int k) const {
    Scalar f(1);
    for (int j = 2; j <= k; ++j) f *= Scalar(j);
    return f * c_(k);
  }

  Jet& operator+=(const Jet& o) { c_ += o.c_; return *this; }
  Jet& operator-=(const Jet& o) { c_ -= o.c_; return *this; }
  Jet& operator+=(Scalar s) { c_(0) += s; return *this; }
  Jet& operator-=(Scalar s) { c_(0) -= s; return *this; }
  Jet& operator*=(Scalar s) { c_ *= s; return *this; }

  Jet operator-() const {
    Jet r = *this;
    r.c_ = -r.c_;
    return r;
  }

 private:
  Scalar point_;
  Coeffs c_;
};

template <typename Scalar>
Jet<Scalar> operator+(Jet<Scalar> a, const Jet<Scalar>& b) { return a += b; }
template <typename Scalar>
Jet<Scalar> operator-(Jet<Scalar> a, const Jet<Scalar>& b) { return a -= b; }
template <typename Scalar>
Jet<Scalar> operator+(Jet<Scalar> a, Scalar s) { return a += s; }
template <typename Scalar>
Jet<Scalar> operator-(Jet<Scalar> a, Scalar s) { return a -= s; }
template <typename Scalar>
Jet<Scalar> operator*(Jet<Scalar> a, Scalar s) { return a *= s; }
template <typename Scalar>
Jet<Scalar> operator*(Scalar s, Jet<Scalar> a) { return a *= s; }

template <typename Scalar>
Jet<Scalar> operator*(const Jet<Scalar>& a, const Jet<Scalar>& b) {
  const int n = a.order();
  Jet<Scalar> r(n, a.point());
  for (int k = 0; k <= n; ++k) {
    Scalar acc(0);
    for (int j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    r[k] = acc;
  }
  return r;
}

template <typename Scalar>
Jet<Scalar> operator/(const Jet<Scalar>& a, const Jet<Scalar>& b) {
  if (b[0] == Scalar(0)) throw std::domain_error("Jet division: zero constant term");
  const int n = a.order();
  Jet<Scalar> q(n, a.point());
  for (int k = 0; k <= n; ++k) {
    Scalar acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return q;
}

template <typename Scalar>
Jet<Scalar> operator/(Scalar s, const Jet<Scalar>& b) {
  return Jet<Scalar>::constant(b.order(), b.point(), s) / b;
}

// k c_k = sum_{j=1}^{k} j a_j c_{k-j}
template <typename Scalar>
Jet<Scalar> exp(const Jet<Scalar>& a) {
  using std::exp;
  const int n = a.order();
  Jet<Scalar> c(n, a.point());
  c[0] = exp(a[0]);
  for (int k = 1; k <= n; ++k) {
    Scalar acc(0);
    for (int j = 1; j <= k; ++j) acc += Scalar(j) * a[j] * c[k - j];
    c[k] = acc / Scalar(k);
  }
  return c;
}

// a_0 k b_k = k a_k - sum_{j=1}^{k-1} j b_j a_{k-j}
template <typename Scalar>
Jet<Scalar> log(const Jet<Scalar>& a) {
  using std::log;
  if (!(a[0] > Scalar(0))) throw std::domain_error("Jet log: non-positive constant term");
  const int n = a.order();
  Jet<Scalar> b(n, a.point());
  b[0] = log(a[0]);
  for (int k = 1; k <= n; ++k) {
    Scalar acc = Scalar(k) * a[k];
    for (int j = 1; j < k; ++j) acc -= Scalar(j) * b[j] * a[k - j];
    b[k] = acc / (Scalar(k) * a[0]);
  }
  return b;
}

// a^p for integer p (any nonzero a_0):
//   k a_0 c_k = sum_{j=1}^{k} (p j - k + j) a_j c_{k-j}
template <typename Scalar>
Jet<Scalar> pow(const Jet<Scalar>& a, int p) {
  using std::pow;
  if (a[0] == Scalar(0)) throw std::domain_error("Jet pow: zero constant term");
  const int n = a.order();
  Jet<Scalar> c(n, a.point());
  c[0] = pow(a[0], p);
  for (int k = 1; k <= n; ++k) {
    Scalar acc(0);
    for (int j = 1; j <= k; ++j) acc += Scalar(p * j - k + j) * a[j] * c[k - j];
    c[k] = acc / (Scalar(k) * a[0]);
  }
  return c;
}

}  // namespace stirbern
