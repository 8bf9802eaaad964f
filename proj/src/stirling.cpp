#include "stirbern/stirling.hpp"

#include "stirbern/harmonic_nest.hpp"

#include <stdexcept>
#include <string>

namespace stirbern {

StirlingTriangle::StirlingTriangle(int n_max) {
  if (n_max < 0) throw std::invalid_argument("stirling_triangle: n_max must be >= 0");
  rows_.reserve(n_max + 1);
  rows_.push_back({Integer(1)});
  for (int n = 0; n < n_max; ++n) {
    const auto& prev = rows_.back();
    std::vector<Integer> next(n + 2);
    for (int k = 1; k <= n + 1; ++k) {
      Integer v = prev[k - 1];
      if (k <= n) v -= n * prev[k];
      next[k] = std::move(v);
    }
    rows_.push_back(std::move(next));
  }
}

Integer StirlingTriangle::operator()(int n, int k) const {
  if (n < 0 || n > n_max()) throw std::out_of_range("StirlingTriangle: n out of range");
  if (k < 0 || k > n) return 0;
  return rows_[n][k];
}

const std::vector<Integer>& StirlingTriangle::row(int n) const {
  if (n < 0 || n > n_max()) throw std::out_of_range("StirlingTriangle: n out of range");
  return rows_[n];
}

std::vector<Integer> stirling_from_product(int n) {
  if (n < 0) throw std::invalid_argument("stirling_from_product: n must be >= 0");
  std::vector<Integer> poly{Integer(1)};
  for (int j = 0; j < n; ++j) {
    // multiply by (x - j)
    std::vector<Integer> next(poly.size() + 1);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= j * poly[d];
    }
    poly = std::move(next);
  }
  return poly;
}

Integer stirling_from_nested(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("stirling_from_nested: need 1 <= i <= n");
  Rational v = Rational(factorial(n - 1)) * harmonic_nest(i - 1, n - 1);
  if (!v.is_integer())
    throw std::logic_error("stirling_from_nested: non-integer result " + v.str() + " at (" +
                           std::to_string(n) + "," + std::to_string(i) + ")");
  return sign_power(n + i) * v.num();
}

}  // namespace stirbern
