#include "threecore/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace threecore {

namespace {

using Mag = std::vector<std::uint32_t>;

void trim(Mag& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

// -1, 0, +1 comparison of magnitudes
int cmp_mag(const Mag& a, const Mag& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Mag add_mag(const Mag& a, const Mag& b) {
  const Mag& lo = a.size() < b.size() ? a : b;
  const Mag& hi = a.size() < b.size() ? b : a;
  Mag out(hi.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
    out[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  out[hi.size()] = static_cast<std::uint32_t>(carry);
  trim(out);
  return out;
}

// requires a >= b
Mag sub_mag(const Mag& a, const Mag& b) {
  Mag out(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (d < 0) {
      d += (std::int64_t{1} << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<std::uint32_t>(d);
  }
  trim(out);
  return out;
}

Mag mul_mag(const Mag& a, const Mag& b) {
  if (a.empty() || b.empty()) return {};
  Mag out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] +
                          out[i + j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  trim(out);
  return out;
}

// in-place quotient, returns remainder; d != 0
std::uint32_t divrem_small(Mag& a, std::uint32_t d) {
  std::uint64_t rem = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | a[i];
    a[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  trim(a);
  return static_cast<std::uint32_t>(rem);
}

Mag shl_mag(const Mag& a, unsigned bits) {
  if (a.empty() || bits == 0) return a;
  Mag out(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] |= a[i] << bits;
    out[i + 1] = a[i] >> (32 - bits);
  }
  trim(out);
  return out;
}

Mag shr_mag(const Mag& a, unsigned bits) {
  if (a.empty() || bits == 0) return a;
  Mag out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] >> bits;
    if (i + 1 < a.size()) out[i] |= a[i + 1] << (32 - bits);
  }
  trim(out);
  return out;
}

// Knuth algorithm D. b nonzero.
void divrem_mag(const Mag& a, const Mag& b, Mag& q, Mag& r) {
  if (b.empty()) throw std::domain_error("Int: division by zero");
  if (cmp_mag(a, b) < 0) {
    q.clear();
    r = a;
    return;
  }
  if (b.size() == 1) {
    q = a;
    std::uint32_t rem = divrem_small(q, b[0]);
    r.clear();
    if (rem) r.push_back(rem);
    return;
  }

  const unsigned shift = std::countl_zero(b.back());
  Mag u = shl_mag(a, shift);
  Mag v = shl_mag(b, shift);
  const std::size_t n = v.size();
  u.resize(a.size() + 1, 0);  // room for the top limb; a.size() >= n here
  const std::size_t m = u.size() - n;

  q.assign(m, 0);
  const std::uint64_t vtop = v[n - 1];
  const std::uint64_t vnext = v[n - 2];
  for (std::size_t j = m; j-- > 0;) {
    std::uint64_t num =
        (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    std::uint64_t qhat = num / vtop;
    std::uint64_t rhat = num % vtop;
    while (qhat >= (std::uint64_t{1} << 32) ||
           qhat * vnext > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += vtop;
      if (rhat >= (std::uint64_t{1} << 32)) break;
    }
    // multiply-subtract qhat * v from u[j .. j+n]
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      std::int64_t d = static_cast<std::int64_t>(u[i + j]) -
                       static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
      if (d < 0) {
        d += (std::int64_t{1} << 32);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<std::uint32_t>(d);
    }
    std::int64_t top = static_cast<std::int64_t>(u[j + n]) -
                       static_cast<std::int64_t>(carry) - borrow;
    if (top < 0) {
      // qhat was one too large: add v back, the carry out cancels the borrow
      --qhat;
      std::uint64_t c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
        u[i + j] = static_cast<std::uint32_t>(s);
        c2 = s >> 32;
      }
      top += static_cast<std::int64_t>(c2);
    }
    u[j + n] = static_cast<std::uint32_t>(top);
    q[j] = static_cast<std::uint32_t>(qhat);
  }
  trim(q);
  u.resize(n);
  trim(u);
  r = shr_mag(u, shift);
}

Mag mag_from_u64(std::uint64_t v) {
  Mag m;
  if (v) m.push_back(static_cast<std::uint32_t>(v));
  if (v >> 32) m.push_back(static_cast<std::uint32_t>(v >> 32));
  return m;
}

bool mag_fits_int64(const Mag& m, int sign) {
  if (m.size() > 2) return false;
  std::uint64_t v = m.empty() ? 0 : m[0];
  if (m.size() == 2) v |= static_cast<std::uint64_t>(m[1]) << 32;
  if (sign >= 0) return v <= static_cast<std::uint64_t>(INT64_MAX);
  return v <= static_cast<std::uint64_t>(INT64_MAX) + 1;
}

std::int64_t mag_to_int64(const Mag& m, int sign) {
  std::uint64_t v = m.empty() ? 0 : m[0];
  if (m.size() == 2) v |= static_cast<std::uint64_t>(m[1]) << 32;
  return sign < 0 ? static_cast<std::int64_t>(~v + 1)
                  : static_cast<std::int64_t>(v);
}

}  // namespace

Int Int::make_big(int sign, Mag mag) {
  trim(mag);
  Int out;
  if (mag.empty()) return out;
  if (mag_fits_int64(mag, sign)) {
    out.small_ = mag_to_int64(mag, sign);
    return out;
  }
  out.big_ = true;
  out.sign_ = sign;
  out.small_ = 0;
  out.mag_ = std::move(mag);
  return out;
}

Int::Mag Int::magnitude() const {
  if (big_) return mag_;
  std::uint64_t a = small_ < 0
                        ? ~static_cast<std::uint64_t>(small_) + 1
                        : static_cast<std::uint64_t>(small_);
  return mag_from_u64(a);
}

int Int::signum() const {
  if (big_) return sign_;
  return small_ < 0 ? -1 : (small_ > 0 ? 1 : 0);
}

bool Int::is_even() const {
  return big_ ? (mag_[0] & 1u) == 0 : (small_ & 1) == 0;
}

std::int64_t Int::to_int64() const {
  if (big_) throw std::overflow_error("Int: value does not fit in int64");
  return small_;
}

Int Int::from_i128(__int128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return Int(static_cast<std::int64_t>(v));
  int sign = v < 0 ? -1 : 1;
  unsigned __int128 a = v < 0 ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
  Mag m;
  while (a) {
    m.push_back(static_cast<std::uint32_t>(a));
    a >>= 32;
  }
  return make_big(sign, std::move(m));
}

Int Int::abs() const {
  if (!big_) {
    if (small_ == INT64_MIN) return from_i128(-static_cast<__int128>(small_));
    return Int(small_ < 0 ? -small_ : small_);
  }
  Int out = *this;
  out.sign_ = 1;
  return out;
}

Int Int::operator-() const {
  if (!big_) {
    if (small_ == INT64_MIN) return from_i128(-static_cast<__int128>(small_));
    return Int(-small_);
  }
  Int out = *this;
  out.sign_ = -sign_;
  return out;
}

Int& Int::operator+=(const Int& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t s;
    if (ckd_add(small_, rhs.small_, &s)) {
      small_ = s;
      return *this;
    }
    *this = from_i128(static_cast<__int128>(small_) + rhs.small_);
    return *this;
  }
  int sa = signum(), sb = rhs.signum();
  if (sa == 0) { *this = rhs; return *this; }
  if (sb == 0) return *this;
  Mag a = magnitude(), b = rhs.magnitude();
  if (sa == sb) {
    *this = make_big(sa, add_mag(a, b));
  } else {
    int c = cmp_mag(a, b);
    if (c == 0) { *this = Int(); return *this; }
    *this = c > 0 ? make_big(sa, sub_mag(a, b)) : make_big(sb, sub_mag(b, a));
  }
  return *this;
}

Int& Int::operator-=(const Int& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t s;
    if (ckd_sub(small_, rhs.small_, &s)) {
      small_ = s;
      return *this;
    }
    *this = from_i128(static_cast<__int128>(small_) - rhs.small_);
    return *this;
  }
  *this += -rhs;
  return *this;
}

Int operator*(const Int& lhs, const Int& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    std::int64_t p;
    if (ckd_mul(lhs.small_, rhs.small_, &p)) return Int(p);
    return Int::from_i128(static_cast<__int128>(lhs.small_) * rhs.small_);
  }
  int s = lhs.signum() * rhs.signum();
  if (s == 0) return Int();
  return Int::make_big(s, mul_mag(lhs.magnitude(), rhs.magnitude()));
}

Int& Int::operator*=(const Int& rhs) {
  *this = *this * rhs;
  return *this;
}

void Int::divrem(const Int& a, const Int& b, Int& q, Int& r) {
  if (b.is_zero()) throw std::domain_error("Int: division by zero");
  if (!a.big_ && !b.big_) {
    if (a.small_ == INT64_MIN && b.small_ == -1) {
      q = from_i128(-static_cast<__int128>(INT64_MIN));
      r = Int();
      return;
    }
    q = Int(a.small_ / b.small_);
    r = Int(a.small_ % b.small_);
    return;
  }
  Mag qm, rm;
  divrem_mag(a.magnitude(), b.magnitude(), qm, rm);
  int sa = a.signum(), sb = b.signum();
  q = make_big(sa * sb, std::move(qm));
  r = make_big(sa, std::move(rm));
}

Int operator/(const Int& lhs, const Int& rhs) {
  Int q, r;
  Int::divrem(lhs, rhs, q, r);
  return q;
}

Int operator%(const Int& lhs, const Int& rhs) {
  Int q, r;
  Int::divrem(lhs, rhs, q, r);
  return r;
}

Int Int::gcd(const Int& a, const Int& b) {
  Int x = a.abs(), y = b.abs();
  while (!y.is_zero()) {
    Int q, r;
    divrem(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Int Int::pow(const Int& base, unsigned exp) {
  Int result(1), acc = base;
  while (exp) {
    if (exp & 1u) result *= acc;
    exp >>= 1;
    if (exp) acc *= acc;
  }
  return result;
}

bool operator==(const Int& lhs, const Int& rhs) {
  if (lhs.big_ != rhs.big_) return false;
  if (!lhs.big_) return lhs.small_ == rhs.small_;
  return lhs.sign_ == rhs.sign_ && lhs.mag_ == rhs.mag_;
}

std::strong_ordering operator<=>(const Int& lhs, const Int& rhs) {
  int sa = lhs.signum(), sb = rhs.signum();
  if (sa != sb) return sa <=> sb;
  if (!lhs.big_ && !rhs.big_) return lhs.small_ <=> rhs.small_;
  // Same sign, at least one big: a big value always dominates a small one.
  if (lhs.big_ != rhs.big_) {
    bool lhs_wins = lhs.big_ == (sa > 0);
    return lhs_wins ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = cmp_mag(lhs.mag_, rhs.mag_);
  if (sa < 0) c = -c;
  return c <=> 0;
}

Int Int::from_string(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("Int: empty numeral");
  Int out;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("Int: invalid digit in numeral");
    out *= Int(10);
    out += Int(s[i] - '0');
  }
  return neg ? -out : out;
}

std::string Int::to_string() const {
  if (!big_) return std::to_string(small_);
  Mag m = mag_;
  std::vector<std::uint32_t> groups;  // base 1e9, little-endian
  while (!m.empty()) groups.push_back(divrem_small(m, 1000000000u));
  std::string out = sign_ < 0 ? "-" : "";
  out += std::to_string(groups.back());
  char buf[16];
  for (std::size_t i = groups.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", groups[i]);
    out += buf;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Int& v) {
  return os << v.to_string();
}

Int factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  Int out(1);
  for (int i = 2; i <= n; ++i) out *= Int(i);
  return out;
}

}  // namespace threecore
