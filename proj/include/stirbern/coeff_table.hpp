#pragma once

#include "stirbern/integer.hpp"
#include "stirbern/stirling.hpp"

#include <vector>

namespace stirbern {

// Coefficients a(n,i), 1 <= n <= n_max, 2 <= i <= n+1, of
//   (1/ln x)^(n) = (-1)^n / x^n * sum_i a(n,i) / (ln x)^i.
// Seeded by a(1,2) = 1 and grown by
//   a(n+1,2) = n a(n,2),  a(n+1,n+2) = (n+1) a(n,n+1),
//   a(n+1,i) = (i-1) a(n,i-1) + n a(n,i)   for 3 <= i <= n+1.
class CoeffTable {
 public:
  explicit CoeffTable(int n_max);

  int n_max() const { return static_cast<int>(rows_.size()); }

  // Zero outside the stored support, except the extension a(0,1) = 1 used by
  // the zeroth derivative 1/ln x.
  Integer operator()(int n, int i) const;

  // Row n as a(n,2), ..., a(n,n+1).
  const std::vector<Integer>& row(int n) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

inline CoeffTable coeff_table(int n_max) { return CoeffTable(n_max); }

// a(n,i) = (-1)^(n+i-1) (i-1)! s(n,i-1), for 2 <= i <= n+1.
Integer a_from_stirling(const StirlingTriangle& s, int n, int i);
Integer a_from_stirling(int n, int i);

}  // namespace stirbern
