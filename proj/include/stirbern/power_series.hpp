#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stirbern {

// Truncated formal power series c_0 + c_1 x + ... + c_N x^N. Arithmetic never
// touches terms beyond order N.
template <typename Scalar>
class PowerSeries {
 public:
  explicit PowerSeries(int order) : coeffs_(order + 1, Scalar(0)) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
  }
  PowerSeries(int order, std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
    coeffs_.resize(order + 1, Scalar(0));
  }

  static PowerSeries one(int order) {
    PowerSeries s(order);
    s[0] = Scalar(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& operator[](int k) const { return coeffs_.at(k); }
  Scalar& operator[](int k) { return coeffs_.at(k); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Scalar> coeffs_;
};

template <typename Scalar>
void require_same_order(const PowerSeries<Scalar>& a, const PowerSeries<Scalar>& b) {
  if (a.order() != b.order()) throw std::invalid_argument("PowerSeries: order mismatch");
}

template <typename Scalar>
PowerSeries<Scalar> mul(const PowerSeries<Scalar>& a, const PowerSeries<Scalar>& b) {
  require_same_order(a, b);
  const int n = a.order();
  PowerSeries<Scalar> c(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == Scalar(0)) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

template <typename Scalar>
PowerSeries<Scalar> operator*(const PowerSeries<Scalar>& a, const PowerSeries<Scalar>& b) {
  return mul(a, b);
}

template <typename Scalar>
PowerSeries<Scalar> scale(PowerSeries<Scalar> a, const Scalar& f) {
  for (int k = 0; k <= a.order(); ++k) a[k] *= f;
  return a;
}

template <typename Scalar>
PowerSeries<Scalar> pow(const PowerSeries<Scalar>& a, int m) {
  if (m < 0) throw std::invalid_argument("PowerSeries pow: negative exponent");
  PowerSeries<Scalar> result = PowerSeries<Scalar>::one(a.order());
  PowerSeries<Scalar> base = a;
  while (m > 0) {
    if (m & 1) result = mul(result, base);
    m >>= 1;
    if (m > 0) base = mul(base, base);
  }
  return result;
}

// c_0 = 1/a_0, c_n = -(1/a_0) sum_{j=1}^{n} a_j c_{n-j}.
template <typename Scalar>
PowerSeries<Scalar> reciprocal(const PowerSeries<Scalar>& a) {
  if (a[0] == Scalar(0)) throw std::domain_error("PowerSeries reciprocal: zero constant term");
  const int n = a.order();
  const Scalar inv0 = Scalar(1) / a[0];
  PowerSeries<Scalar> c(n);
  c[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Scalar acc(0);
    for (int j = 1; j <= k; ++j) acc += a[j] * c[k - j];
    c[k] = -(acc * inv0);
  }
  return c;
}

}  // namespace stirbern
