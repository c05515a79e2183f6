#include "threecore/cm_formula.hpp"

#include <stdexcept>
#include <string>

namespace threecore {

CMRep cornacchia_x2_3y2(std::uint64_t p) {
  if (p % 3 != 1 || !is_prime(p))
    throw std::domain_error("cornacchia_x2_3y2: need a prime p == 1 (mod 3)");

  // root of -3 mod p, taken in (p/2, p); p >= 7 here
  std::uint64_t r = sqrt_mod(p - 3, p);
  if (r < p - r) r = p - r;
  std::uint64_t a = p, b = r;
  while (static_cast<unsigned __int128>(b) * b >= p) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  const std::uint64_t rem = p - b * b;
  if (rem % 3 != 0)
    throw std::logic_error("cornacchia_x2_3y2: descent failed");
  const std::uint64_t y = isqrt(rem / 3);
  if (y * y != rem / 3)
    throw std::logic_error("cornacchia_x2_3y2: residual not a square");

  auto x = static_cast<std::int64_t>(b);
  if (x % 3 == 2) x = -x;  // pin x == 1 (mod 3)
  return CMRep{x, static_cast<std::int64_t>(y), p};
}

Int a_star_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::domain_error("a_star_prime: p must be prime");
  if (p == 3 || p % 3 == 2) return Int(0);
  const CMRep rep = cornacchia_x2_3y2(p);
  const Int x(rep.x), y(rep.y);
  return Int(2) * x * x * x - Int(18) * x * y * y;
}

namespace {

// Recursion a*(p^s) = a*(p) a*(p^{s-1}) - p^3 a*(p^{s-2}) given a*(p),
// shared by the single-value path and the sieve tables.
Int prime_power_value(const Int& ap, std::uint64_t p, int s) {
  if (s == 0) return Int(1);
  if (p == 3) return Int(0);
  if (p % 3 == 2) {
    if (s % 2 == 1) return Int(0);
    return Int::pow(-Int::pow(Int(static_cast<std::int64_t>(p)), 3),
                    static_cast<unsigned>(s / 2));
  }
  const Int p_cubed = Int::pow(Int(static_cast<std::int64_t>(p)), 3);
  Int prev(1), cur = ap;
  for (int i = 2; i <= s; ++i) {
    Int next = ap * cur - p_cubed * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Int a_star_prime_power(std::uint64_t p, int s) {
  if (!is_prime(p))
    throw std::domain_error("a_star_prime_power: p must be prime");
  if (s < 0) throw std::domain_error("a_star_prime_power: s must be >= 0");
  if (s == 0) return Int(1);
  if (p == 3 || p % 3 == 2) return prime_power_value(Int(0), p, s);
  return prime_power_value(a_star_prime(p), p, s);
}

Int a_star(const Factorization& f) {
  Int result(1);
  for (const PrimePower& pp : f.factors) {
    if (pp.prime == 3 || (pp.prime % 3 == 2 && pp.exponent % 2 == 1))
      return Int(0);  // zero factor
    result *= a_star_prime_power(pp.prime, pp.exponent);
  }
  if (f.value % 3 != 1 && !result.is_zero())
    throw std::logic_error("a_star: nonzero value off the 1 (mod 3) progression");
  return result;
}

Int a_star(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("a_star: n must be >= 1");
  return a_star(factorize(n));
}

Int b_star(const Factorization& f) {
  if (f.value % 3 != 1) return Int(0);
  Int result(1);
  for (const PrimePower& pp : f.factors) {
    if (pp.prime % 3 == 2) {
      if (pp.exponent % 2 == 1) return Int(0);
    } else {
      result *= Int(pp.exponent + 1);
    }
  }
  return result;
}

Int b_star(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("b_star: m must be >= 1");
  return b_star(factorize(m));
}

Int legendre3_divisor_sum(std::uint64_t m) {
  const Factorization f = factorize(m);
  // sum over divisors of a completely multiplicative character splits into
  // per-prime geometric sums
  Int result(1);
  for (const PrimePower& pp : f.factors) {
    const int chi = legendre3(pp.prime);
    Int geometric(1);
    int power = 1;
    for (int e = 1; e <= pp.exponent; ++e) {
      power *= chi;
      geometric += Int(power);
    }
    result *= geometric;
  }
  return result;
}

VanishCertificate vanishes(const Factorization& shifted) {
  VanishCertificate out;
  out.shifted = shifted.value;
  for (const PrimePower& pp : shifted.factors) {
    if (pp.prime % 3 == 2 && pp.exponent % 2 == 1)
      out.certifying.push_back(pp.prime);
  }
  out.vanishes = !out.certifying.empty();
  if (out.vanishes) out.witness = out.certifying.front();
  return out;
}

VanishCertificate vanishes(std::uint64_t n) {
  if (n > (UINT64_MAX - 1) / 3)
    throw std::invalid_argument("vanishes: 3n+1 out of range");
  return vanishes(factorize(3 * n + 1));
}

Int a_coeff(std::uint64_t n) {
  if (n > (UINT64_MAX - 1) / 3)
    throw std::invalid_argument("a_coeff: 3n+1 out of range");
  return a_star(3 * n + 1);
}

Int b_coeff(std::uint64_t n) {
  if (n > (UINT64_MAX - 1) / 3)
    throw std::invalid_argument("b_coeff: 3n+1 out of range");
  return b_star(3 * n + 1);
}

std::vector<Int> a_star_table(std::uint64_t limit, const SpfSieve& sieve) {
  if (limit > sieve.limit())
    throw std::out_of_range("a_star_table: limit exceeds sieve range");
  std::vector<Int> table(limit + 1, Int(0));
  if (limit >= 1) table[1] = Int(1);
  for (std::uint64_t m = 2; m <= limit; ++m) {
    const std::uint64_t p = sieve.smallest_factor(m);
    std::uint64_t rest = m;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (rest == 1 && e == 1) {
      table[m] = a_star_prime(p);  // first visit of each prime
    } else {
      table[m] = prime_power_value(table[p], p, e) * table[rest];
    }
  }
  return table;
}

std::vector<Int> b_star_table(std::uint64_t limit, const SpfSieve& sieve) {
  if (limit > sieve.limit())
    throw std::out_of_range("b_star_table: limit exceeds sieve range");
  // multiplicative divisor-sum table first, progression mask second
  std::vector<Int> table(limit + 1, Int(0));
  if (limit >= 1) table[1] = Int(1);
  for (std::uint64_t m = 2; m <= limit; ++m) {
    const std::uint64_t p = sieve.smallest_factor(m);
    std::uint64_t rest = m;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    Int local(1);
    if (p % 3 == 2)
      local = Int(e % 2 == 0 ? 1 : 0);
    else if (p % 3 == 1)
      local = Int(e + 1);
    table[m] = local * table[rest];
  }
  for (std::uint64_t m = 1; m <= limit; ++m) {
    if (m % 3 != 1) table[m] = Int(0);
  }
  return table;
}

}  // namespace threecore
