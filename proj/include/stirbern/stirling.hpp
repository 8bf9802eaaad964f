#pragma once

#include "stirbern/integer.hpp"

#include <vector>

namespace stirbern {

// Signed Stirling numbers of the first kind s(n,k), 0 <= k <= n <= n_max,
// built by the triangular recurrence s(n+1,k) = s(n,k-1) - n s(n,k).
class StirlingTriangle {
 public:
  explicit StirlingTriangle(int n_max);

  int n_max() const { return static_cast<int>(rows_.size()) - 1; }

  // Zero outside 0 <= k <= n.
  Integer operator()(int n, int k) const;
  const std::vector<Integer>& row(int n) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

inline StirlingTriangle stirling_triangle(int n_max) { return StirlingTriangle(n_max); }

// Coefficients of x(x-1)...(x-n+1), by direct polynomial multiplication.
std::vector<Integer> stirling_from_product(int n);

// s(n,i) = (-1)^(n+i) (n-1)! H(i-1, n-1), for 1 <= i <= n.
Integer stirling_from_nested(int n, int i);

}  // namespace stirbern
