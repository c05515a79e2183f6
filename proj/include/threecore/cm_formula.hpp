#pragma once

#include <cstdint>
#include <vector>

#include "threecore/bigint.hpp"
#include "threecore/factor.hpp"

namespace threecore {

// Closed-form route for the coefficients of the eighth Euler-product power
// (a*, indexed by q-power) and the 3-core counts (b*), built from the CM
// prime formula a*(p) = 2x^3 - 18xy^2 with p = x^2 + 3y^2, the Hecke
// prime-power recursion, and multiplicativity.

// Normalized representation p = x^2 + 3y^2 with x == 1 (mod 3) and y >= 0.
// The sign of y is value-neutral (y only ever appears squared); the sign of
// x is pinned by the congruence.
struct CMRep {
  std::int64_t x;
  std::int64_t y;
  std::uint64_t p;
  friend bool operator==(const CMRep&, const CMRep&) = default;
};

// Cornacchia's algorithm specialized to x^2 + 3y^2 = p. Requires p prime
// with p == 1 (mod 3); throws std::domain_error otherwise.
CMRep cornacchia_x2_3y2(std::uint64_t p);

// a*(p) for prime p: 0 when p = 3 or p == 2 (mod 3), else 2x^3 - 18xy^2.
Int a_star_prime(std::uint64_t p);

// a*(p^s): 1 at s = 0; 0 for p = 3; for p == 2 (mod 3) zero at odd s and
// (-1)^{s/2} p^{3s/2} at even s; for p == 1 (mod 3) the Hecke recursion
// a*(p^s) = a*(p) a*(p^{s-1}) - p^3 a*(p^{s-2}), never zero.
Int a_star_prime_power(std::uint64_t p, int s);

// Multiplicative assembly over the factorization of n. Defined for every
// n >= 1; the product forces 0 off the 1 (mod 3) progression and an
// internal consistency check enforces that.
Int a_star(std::uint64_t n);
Int a_star(const Factorization& f);

// b*(m) = sum_{d | m} (d/3) on the m == 1 (mod 3) progression and 0 off it,
// evaluated through the multiplicative closed form
//   prod_{p == 1 (3)} (e_p + 1) * prod_{p == 2 (3)} [e_p even].
Int b_star(std::uint64_t m);
Int b_star(const Factorization& f);

// The literal divisor sum sum_{d | m} legendre3(d), with no progression
// masking. Independent of b_star's closed form; used to cross-check it.
Int legendre3_divisor_sum(std::uint64_t m);

struct VanishCertificate {
  bool vanishes = false;
  std::uint64_t shifted = 0;              // 3n+1
  std::uint64_t witness = 0;              // smallest certifying prime when vanishing
  std::vector<std::uint64_t> certifying;  // all primes == 2 (mod 3) with odd order
};

// a(n) = b(n) = 0 exactly when some prime p == 2 (mod 3) divides 3n+1 to an
// odd power; returns the full certificate.
VanishCertificate vanishes(std::uint64_t n);
VanishCertificate vanishes(const Factorization& shifted);

// Index-shift wrappers: a(n) = a*(3n+1), b(n) = b*(3n+1).
Int a_coeff(std::uint64_t n);
Int b_coeff(std::uint64_t n);

// Bulk tables for sweeps: values at every index 1..limit (index 0 holds 0),
// computed multiplicatively over the smallest-prime-factor sieve so each
// prime runs Cornacchia once.
std::vector<Int> a_star_table(std::uint64_t limit, const SpfSieve& sieve);
std::vector<Int> b_star_table(std::uint64_t limit, const SpfSieve& sieve);

}  // namespace threecore
