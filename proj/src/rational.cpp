#include "threecore/rational.hpp"

#include <stdexcept>
#include <utility>

namespace threecore {

Rational::Rational(Int numerator, Int denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_.signum() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = Int(1);
    return;
  }
  Int g = Int::gcd(num_, den_);
  if (g != Int(1)) {
    num_ /= g;
    den_ /= g;
  }
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_.is_zero()) throw std::domain_error("Rational: division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  reduce();
  return *this;
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  return lhs.num_ * rhs.den_ <=> rhs.num_ * lhs.den_;
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) throw std::domain_error("Rational: negative digit count");
  const bool neg = num_.signum() < 0;
  Int scaled = num_.abs() * Int::pow(Int(10), static_cast<unsigned>(digits));
  Int q, r;
  Int::divrem(scaled, den_, q, r);
  if (r * Int(2) >= den_) q += Int(1);  // round half away from zero
  std::string s = q.to_string();
  if (digits == 0) return neg && q != Int(0) ? "-" + s : s;
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return neg && q != Int(0) ? "-" + s : s;
}

}  // namespace threecore
