#include "stirbern/coeff_table.hpp"

#include <stdexcept>

namespace stirbern {

CoeffTable::CoeffTable(int n_max) {
  if (n_max < 1) throw std::invalid_argument("coeff_table: n_max must be >= 1");
  rows_.reserve(n_max);
  rows_.push_back({Integer(1)});
  for (int n = 1; n < n_max; ++n) {
    const auto& cur = rows_.back();  // a(n,2..n+1), index i-2
    std::vector<Integer> next(n + 1);  // a(n+1,2..n+2)
    next[0] = n * cur[0];
    for (int i = 3; i <= n + 1; ++i) next[i - 2] = (i - 1) * cur[i - 3] + n * cur[i - 2];
    next[n] = (n + 1) * cur[n - 1];
    rows_.push_back(std::move(next));
  }
}

Integer CoeffTable::operator()(int n, int i) const {
  if (n == 0) return i == 1 ? 1 : 0;
  if (n < 0 || n > n_max()) throw std::out_of_range("CoeffTable: n out of range");
  if (i < 2 || i > n + 1) return 0;
  return rows_[n - 1][i - 2];
}

const std::vector<Integer>& CoeffTable::row(int n) const {
  if (n < 1 || n > n_max()) throw std::out_of_range("CoeffTable: n out of range");
  return rows_[n - 1];
}

Integer a_from_stirling(const StirlingTriangle& s, int n, int i) {
  if (i < 2 || i > n + 1) throw std::invalid_argument("a_from_stirling: need 2 <= i <= n+1");
  return sign_power(n + i - 1) * factorial(i - 1) * s(n, i - 1);
}

Integer a_from_stirling(int n, int i) { return a_from_stirling(StirlingTriangle(n), n, i); }

}  // namespace stirbern
