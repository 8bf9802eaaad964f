#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace stirbern {

using Integer = boost::multiprecision::cpp_int;

inline Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  Integer r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

// n (n-1) ... (n-k+1); zero when k > n >= 0.
inline Integer falling_factorial(long n, long k) {
  if (k < 0) throw std::domain_error("falling factorial with negative length");
  Integer r = 1;
  for (long j = 0; j < k; ++j) r *= (n - j);
  return r;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (long j = 1; j <= k; ++j) {
    r *= (n - k + j);
    r /= j;
  }
  return r;
}

inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace stirbern
