#include "stirbern/harmonic_nest.hpp"

#include <stdexcept>

namespace stirbern {

HarmonicNest::HarmonicNest(int depth, int m_max) : depth_(depth) {
  if (depth < 0 || m_max < 0) throw std::invalid_argument("HarmonicNest: negative depth or range");
  std::vector<Rational> level(m_max + 1, Rational(1));
  for (int j = 1; j <= depth; ++j) {
    std::vector<Rational> next(m_max + 1);
    for (int m = 1; m <= m_max; ++m) {
      if (j > m) continue;
      next[m] = next[m - 1] + level[m - 1] / Rational(m);
    }
    level = std::move(next);
  }
  values_ = std::move(level);
}

const Rational& HarmonicNest::operator()(int m) const {
  if (m < 0 || m > m_max()) throw std::out_of_range("HarmonicNest: m out of range");
  return values_[m];
}

Rational harmonic_nest(int depth, int m) { return HarmonicNest(depth, m)(m); }

}  // namespace stirbern
