#pragma once

#include "stirbern/integer.hpp"

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace stirbern {

// Exact rational in canonical form: gcd(num, den) == 1, den > 0, zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer v) : num_(std::move(v)), den_(1) {}  // NOLINT
  Rational(Integer num, Integer den);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_.sign(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  double to_double() const;

  // "p/q" in lowest terms, sign on the numerator; integers print bare.
  std::string str() const;

  // Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

 private:
  void normalize();

  Integer num_;
  Integer den_;
};

Rational inverse(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace stirbern
