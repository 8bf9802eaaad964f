#pragma once

#include "stirbern/integer.hpp"
#include "stirbern/power_series.hpp"
#include "stirbern/rational.hpp"

#include <vector>

namespace stirbern {

using RationalSeries = PowerSeries<Rational>;

// ln(1+x) = sum_{k>=1} (-1)^(k-1) x^k / k, truncated at order N >= 1.
RationalSeries log1p_series(int order);

// s(n,m) = n! [x^n] ln(1+x)^m / m!.
Integer stirling_from_series(int n, int m);

// b_0..b_{n_max} as the coefficients of 1 / (ln(1+x)/x).
std::vector<Rational> bernoulli2_series(int n_max);

}  // namespace stirbern
