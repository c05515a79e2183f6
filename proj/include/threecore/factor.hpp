#pragma once

#include <cstdint>
#include <vector>

namespace threecore {

struct PrimePower {
  std::uint64_t prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Complete factorization: primes strictly increasing, exponents >= 1,
// product of prime powers equals value. value == 1 has no factors.
struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;

  int exponent_of(std::uint64_t p) const;  // 0 when p does not divide value
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Deterministic Miller-Rabin, valid for every n < 2^64.
bool is_prime(std::uint64_t n);

// Trial division for small factors, then Pollard rho with Brent cycle
// detection. n >= 1; throws std::invalid_argument on 0.
Factorization factorize(std::uint64_t n);

// Legendre symbol modulo 3: 0 on multiples of 3, +1 on d == 1 (mod 3),
// -1 on d == 2 (mod 3). d >= 1.
int legendre3(std::uint64_t d);

// Smallest-prime-factor table for bulk sweeps: factorization in O(log n)
// per value after an O(limit log log limit) build. Built once, read-only
// afterwards, safe to share across threads.
class SpfSieve {
 public:
  explicit SpfSieve(std::uint64_t limit);  // covers 2..limit

  std::uint64_t limit() const { return spf_.size() - 1; }
  std::uint32_t smallest_factor(std::uint64_t n) const;  // n in [2, limit]
  Factorization factorize(std::uint64_t n) const;        // n in [1, limit]

 private:
  std::vector<std::uint32_t> spf_;
};

std::uint64_t isqrt(std::uint64_t n);

// Modular helpers on uint64 (128-bit intermediates).
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Square root of a (mod p) for an odd prime p, via Tonelli-Shanks.
// Requires a to be a quadratic residue; throws std::domain_error otherwise.
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p);

}  // namespace threecore
