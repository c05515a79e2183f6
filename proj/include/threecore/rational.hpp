#pragma once

#include <compare>
#include <string>

#include "threecore/bigint.hpp"

namespace threecore {

// Reduced fraction with positive denominator. Every operation renormalizes,
// so gcd(|num|, den) == 1 and den >= 1 hold at all times.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int value) : num_(std::move(value)), den_(1) {}  // NOLINT
  Rational(std::int64_t value) : num_(value), den_(1) {}    // NOLINT
  Rational(Int numerator, Int denominator);  // throws std::domain_error on 0 den

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == Int(1); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { lhs += rhs; return lhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { lhs -= rhs; return lhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { lhs *= rhs; return lhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { lhs /= rhs; return lhs; }
  Rational operator-() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  // "p/q", or just "p" when integral
  std::string to_string() const;
  // Fixed-point decimal with the given number of fraction digits, rounded
  // half away from zero. digits == 0 renders a plain integer.
  std::string to_decimal(int digits) const;

 private:
  void reduce();
  Int num_;
  Int den_;
};

}  // namespace threecore
