#pragma once

#include "stirbern/coeff_table.hpp"
#include "stirbern/rational.hpp"
#include "stirbern/stirling.hpp"

#include <vector>

namespace stirbern {

// Bernoulli numbers of the second kind, x / ln(1+x) = sum b_n x^n.

// Closed form through the derivative coefficients:
//   b_n = (-1)^n / n! * (1/(n+1) + sum_{k=2}^{n} (a(n,k) - n a(n-1,k)) / k!),  n >= 2,
// with b_0 = 1 and b_1 = 1/2 stored. `table` must cover row n.
Rational bernoulli2_qi(const CoeffTable& table, int n);
Rational bernoulli2_qi(int n);

// b_n = 1/n! * sum_{k=0}^{n} s(n,k) / (k+1).
Rational bernoulli2_nemes(const StirlingTriangle& s, int n);
Rational bernoulli2_nemes(int n);

// Cauchy numbers of the first kind, n! b_n.
Rational cauchy1(int n);

// Depth-n nested harmonic sum with outer bound n; equals 1/n!.
Rational reciprocal_factorial(int n);

}  // namespace stirbern
