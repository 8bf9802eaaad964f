#pragma once

#include "stirbern/rational.hpp"

#include <vector>

namespace stirbern {

// Nested harmonic sums of a fixed depth j:
//   H(j, m) = sum over m >= l_1 > l_2 > ... > l_j >= 1 of 1/(l_1 l_2 ... l_j),
// i.e. the elementary symmetric polynomial e_j(1, 1/2, ..., 1/m).
// Built by the ladder H(j,m) = H(j,m-1) + H(j-1,m-1)/m with H(0,m) = 1.
class HarmonicNest {
 public:
  HarmonicNest(int depth, int m_max);

  int depth() const { return depth_; }
  int m_max() const { return static_cast<int>(values_.size()) - 1; }

  const Rational& operator()(int m) const;
  const std::vector<Rational>& values() const { return values_; }

 private:
  int depth_;
  std::vector<Rational> values_;
};

Rational harmonic_nest(int depth, int m);

}  // namespace stirbern
