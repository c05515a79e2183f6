#include "threecore/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace threecore {

int Factorization::exponent_of(std::uint64_t p) const {
  for (const PrimePower& f : factors)
    if (f.prime == p) return f.exponent;
  return 0;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1u) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++r;
  }
  // Sinclair's witness set: deterministic for all n < 2^64.
  for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull,
                          9780504ull, 1795265022ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

// Brent's variant; n odd composite, not a prime power of a tiny prime.
std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  std::uint64_t seed = 0xc0ffee123457ull;
  while (true) {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    const std::uint64_t c = seed % (n - 1) + 1;
    std::uint64_t x = 2, y = 2, q = 1, g = 1, ys = y;
    const unsigned m = 128;
    unsigned r = 1;
    while (g == 1) {
      x = y;
      for (unsigned i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (unsigned k = 0; k < r && g == 1; k += m) {
        ys = y;
        const unsigned bound = std::min(m, r - k);
        for (unsigned i = 0; i < bound; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
    // cycle collapsed; retry with another constant
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  out.value = n;
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull, 41ull, 43ull, 47ull}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  for (std::uint64_t p : primes) {
    if (!out.factors.empty() && out.factors.back().prime == p)
      ++out.factors.back().exponent;
    else
      out.factors.push_back({p, 1});
  }
  return out;
}

int legendre3(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("legendre3: d must be >= 1");
  switch (d % 3) {
    case 0: return 0;
    case 1: return 1;
    default: return -1;
  }
}

SpfSieve::SpfSieve(std::uint64_t limit) {
  if (limit < 2) limit = 2;
  if (limit > 0xffffffffull)
    throw std::invalid_argument("SpfSieve: limit exceeds 32-bit range");
  spf_.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

std::uint32_t SpfSieve::smallest_factor(std::uint64_t n) const {
  if (n < 2 || n >= spf_.size())
    throw std::out_of_range("SpfSieve: value outside sieve range");
  return spf_[n];
}

Factorization SpfSieve::factorize(std::uint64_t n) const {
  if (n == 0 || n >= spf_.size())
    throw std::out_of_range("SpfSieve: value outside sieve range");
  Factorization out;
  out.value = n;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1)
    throw std::domain_error("sqrt_mod: not a quadratic residue");
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);

  // Tonelli-Shanks
  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1u) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = static_cast<std::uint64_t>(s);
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t t = powmod(a, q, p);
  std::uint64_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, cur = t;
    while (cur != 1) {
      cur = mulmod(cur, cur, p);
      ++i;
    }
    std::uint64_t b = powmod(c, std::uint64_t{1} << (m - i - 1), p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

}  // namespace threecore
