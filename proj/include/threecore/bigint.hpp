#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace threecore {

// Exact signed integer. Values that fit in a machine word are kept in an
// int64 with overflow-checked arithmetic; anything wider escalates to a
// little-endian base-2^32 magnitude. Arithmetic never wraps.
class Int {
 public:
  Int() = default;
  Int(std::int64_t v) : small_(v) {}  // NOLINT: implicit
  Int(int v) : small_(v) {}           // NOLINT

  static Int from_string(std::string_view s);  // throws std::invalid_argument
  std::string to_string() const;

  bool is_zero() const { return !big_ && small_ == 0; }
  int signum() const;
  bool is_even() const;
  bool fits_int64() const { return !big_; }
  std::int64_t to_int64() const;  // throws std::overflow_error when big

  Int abs() const;
  Int operator-() const;

  Int& operator+=(const Int& rhs);
  Int& operator-=(const Int& rhs);
  Int& operator*=(const Int& rhs);
  Int& operator/=(const Int& rhs) { *this = *this / rhs; return *this; }
  Int& operator%=(const Int& rhs) { *this = *this % rhs; return *this; }

  friend Int operator+(Int lhs, const Int& rhs) { lhs += rhs; return lhs; }
  friend Int operator-(Int lhs, const Int& rhs) { lhs -= rhs; return lhs; }
  friend Int operator*(const Int& lhs, const Int& rhs);
  friend Int operator/(const Int& lhs, const Int& rhs);
  friend Int operator%(const Int& lhs, const Int& rhs);

  // Truncated division, C++ semantics: q = trunc(a/b), r = a - q*b.
  static void divrem(const Int& a, const Int& b, Int& q, Int& r);

  static Int gcd(const Int& a, const Int& b);  // nonnegative
  static Int pow(const Int& base, unsigned exp);

  friend bool operator==(const Int& lhs, const Int& rhs);
  friend std::strong_ordering operator<=>(const Int& lhs, const Int& rhs);

  friend std::ostream& operator<<(std::ostream& os, const Int& v);

 private:
  using Mag = std::vector<std::uint32_t>;

  // Canonical form: big_ implies the value does not fit in int64, mag_ has no
  // leading zero limb, and sign_ is +-1. Small values live in small_ alone.
  bool big_ = false;
  int sign_ = 0;
  std::int64_t small_ = 0;
  Mag mag_;

  static Int from_i128(__int128 v);
  static Int make_big(int sign, Mag mag);  // normalizes, may demote to small
  Mag magnitude() const;                   // |value| as limbs
  int sign() const { return signum(); }

  friend class Rational;
};

inline bool ckd_add(std::int64_t a, std::int64_t b, std::int64_t* out) {
  return !__builtin_add_overflow(a, b, out);
}
inline bool ckd_sub(std::int64_t a, std::int64_t b, std::int64_t* out) {
  return !__builtin_sub_overflow(a, b, out);
}
inline bool ckd_mul(std::int64_t a, std::int64_t b, std::int64_t* out) {
  return !__builtin_mul_overflow(a, b, out);
}

Int factorial(int n);  // n >= 0

}  // namespace threecore
