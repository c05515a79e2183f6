#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>

#include "threecore/cm_formula.hpp"
#include "threecore/factor.hpp"

using namespace threecore;

namespace {

struct Rng {
  std::uint64_t state = 0x2545f4914f6cdd1dull;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

}  // namespace

TEST_CASE("primality") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(561));  // Carmichael
  CHECK(is_prime(7919));
  CHECK(is_prime(2305843009213693951ull));  // 2^61 - 1
  CHECK_FALSE(is_prime(2305843009213693951ull * 3));
  CHECK_FALSE(is_prime(3825123056546413051ull));  // strong pseudoprime to many bases
  int count = 0;
  for (std::uint64_t n = 2; n < 1000; ++n)
    if (is_prime(n)) ++count;
  CHECK(count == 168);
}

TEST_CASE("factorization fixtures") {
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(10).factors == std::vector<PrimePower>{{2, 1}, {5, 1}});
  CHECK(factorize(208).factors == std::vector<PrimePower>{{2, 4}, {13, 1}});
  CHECK(factorize(1ull << 60).factors == std::vector<PrimePower>{{2, 60}});
  CHECK(factorize(1000000007ull * 1000000007ull).factors ==
        std::vector<PrimePower>{{1000000007ull, 2}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorization reconstructs random values") {
  Rng rng;
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t n = rng.next() >> (rng.next() % 32);
    if (n == 0) continue;
    const Factorization f = factorize(n);
    unsigned __int128 product = 1;
    for (const PrimePower& pp : f.factors) {
      CHECK(is_prime(pp.prime));
      for (int e = 0; e < pp.exponent; ++e) product *= pp.prime;
    }
    CHECK(product == n);
    for (std::size_t k = 1; k < f.factors.size(); ++k)
      CHECK(f.factors[k - 1].prime < f.factors[k].prime);
  }
}

TEST_CASE("sieve agrees with direct factorization") {
  const SpfSieve sieve(20000);
  for (std::uint64_t n = 1; n <= 2000; ++n) CHECK(sieve.factorize(n) == factorize(n));
  Rng rng;
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t n = 2 + rng.next() % 19999;
    CHECK(sieve.factorize(n) == factorize(n));
    CHECK(n % sieve.smallest_factor(n) == 0);
  }
  CHECK_THROWS_AS(sieve.factorize(20001), std::out_of_range);
  CHECK_THROWS_AS(sieve.factorize(0), std::out_of_range);
}

TEST_CASE("legendre symbol mod 3") {
  CHECK(legendre3(3) == 0);
  CHECK(legendre3(7) == 1);
  CHECK(legendre3(2) == -1);
  CHECK(legendre3(1) == 1);
  CHECK_THROWS_AS(legendre3(0), std::invalid_argument);
}

TEST_CASE("modular square roots") {
  Rng rng;
  const std::uint64_t primes[] = {7, 13, 97, 1000003, 998244353, 2305843009213693951ull};
  for (std::uint64_t p : primes) {
    for (int i = 0; i < 40; ++i) {
      const std::uint64_t a = mulmod(rng.next() % p, rng.next() % p, p);
      if (a == 0) continue;
      const std::uint64_t square = mulmod(a, a, p);
      const std::uint64_t r = sqrt_mod(square, p);
      CHECK(mulmod(r, r, p) == square);
    }
  }
  CHECK_THROWS_AS(sqrt_mod(5, 7), std::domain_error);  // 5 is not a QR mod 7
}

TEST_CASE("cornacchia fixtures") {
  CHECK(cornacchia_x2_3y2(13) == CMRep{1, 2, 13});
  CHECK(cornacchia_x2_3y2(7) == CMRep{-2, 1, 7});
  CHECK(cornacchia_x2_3y2(19) == CMRep{4, 1, 19});
  CHECK_THROWS_AS(cornacchia_x2_3y2(5), std::domain_error);   // 5 == 2 (mod 3)
  CHECK_THROWS_AS(cornacchia_x2_3y2(3), std::domain_error);
  CHECK_THROWS_AS(cornacchia_x2_3y2(49), std::domain_error);  // not prime
}

TEST_CASE("cornacchia postconditions on every fitting prime below 1e4") {
  for (std::uint64_t p = 7; p < 10000; ++p) {
    if (p % 3 != 1 || !is_prime(p)) continue;
    const CMRep rep = cornacchia_x2_3y2(p);
    CHECK(rep.x * rep.x + 3 * rep.y * rep.y ==
          static_cast<std::int64_t>(p));
    CHECK(((rep.x % 3) + 3) % 3 == 1);
    CHECK(rep.y >= 0);
  }
}

TEST_CASE("prime coefficient formula") {
  CHECK(a_star_prime(13) == Int(-70));
  CHECK(a_star_prime(5) == Int(0));
  CHECK(a_star_prime(7) == Int(20));
  CHECK(a_star_prime(3) == Int(0));
  CHECK(a_star_prime(2) == Int(0));
  CHECK_THROWS_AS(a_star_prime(10), std::domain_error);
}

TEST_CASE("prime power values") {
  CHECK(a_star_prime_power(5, 3) == Int(0));
  CHECK(a_star_prime_power(5, 4) == Int(15625));
  CHECK(a_star_prime_power(13, 2) == Int(2703));
  CHECK(a_star_prime_power(13, 3) == Int(-35420));
  CHECK(a_star_prime_power(2, 2) == Int(-8));
  CHECK(a_star_prime_power(2, 4) == Int(64));
  CHECK(a_star_prime_power(5, 2) == Int(-125));
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 13ull})
    CHECK(a_star_prime_power(p, 0) == Int(1));
  for (int s = 1; s <= 8; ++s) CHECK(a_star_prime_power(3, s) == Int(0));
  CHECK_THROWS_AS(a_star_prime_power(6, 2), std::domain_error);
  CHECK_THROWS_AS(a_star_prime_power(7, -1), std::domain_error);
}

TEST_CASE("prime power recursion holds term by term") {
  for (std::uint64_t p : {7ull, 13ull, 19ull, 31ull}) {
    const Int p_cubed = Int::pow(Int(static_cast<std::int64_t>(p)), 3);
    for (int s = 2; s <= 6; ++s) {
      CHECK(a_star_prime_power(p, s) ==
            a_star_prime(p) * a_star_prime_power(p, s - 1) -
                p_cubed * a_star_prime_power(p, s - 2));
    }
  }
}

TEST_CASE("prime power congruence and nonvanishing") {
  for (std::uint64_t p : {7ull, 13ull, 19ull, 31ull, 37ull, 43ull}) {
    const CMRep rep = cornacchia_x2_3y2(p);
    const Int base = Int(8) * Int(rep.x) * Int(rep.x) * Int(rep.x);
    const Int modulus(static_cast<std::int64_t>(p));
    for (int s = 0; s <= 5; ++s) {
      const Int value = a_star_prime_power(p, s);
      CHECK_FALSE(value.is_zero());
      CHECK(((value - Int::pow(base, static_cast<unsigned>(s))) % modulus)
                .is_zero());
    }
  }
}

TEST_CASE("multiplicative assembly") {
  CHECK(a_star(1) == Int(1));
  CHECK(a_star(16) == Int(64));
  CHECK(a_star(208) == Int(-4480));
  CHECK(a_star(208) == a_star(13) * a_star(16));
  CHECK(a_star(208) != Int(-4408));  // rejects the miscopied product
  for (std::uint64_t n : {3ull, 9ull, 12ull, 2ull, 5ull, 11ull})
    CHECK(a_star(n) == Int(0));
  CHECK_THROWS_AS(a_star(0), std::invalid_argument);
}

TEST_CASE("multiplicativity on random coprime pairs") {
  Rng rng;
  int done = 0;
  while (done < 200) {
    const std::uint64_t m = 1 + rng.next() % 10000;
    const std::uint64_t n = 1 + rng.next() % 10000;
    if (std::gcd(m, n) != 1) continue;
    CHECK(a_star(m * n) == a_star(m) * a_star(n));
    CHECK(b_star(m * n) == b_star(m) * b_star(n));
    ++done;
  }
}

TEST_CASE("divisor-sum coefficients") {
  CHECK(b_star(7) == Int(2));
  CHECK(b_star(16) == Int(1));
  CHECK(b_star(28) == Int(2));
  CHECK(b_star(1) == Int(1));
  CHECK(b_star(49) == Int(3));
  for (std::uint64_t m : {2ull, 3ull, 5ull, 6ull, 9ull, 11ull})
    CHECK(b_star(m) == Int(0));
  CHECK_THROWS_AS(b_star(0), std::invalid_argument);
}

TEST_CASE("closed form matches the literal divisor sum") {
  for (std::uint64_t m = 1; m <= 5000; ++m) {
    if (m % 3 == 1) {
      CHECK(b_star(m) == legendre3_divisor_sum(m));
    } else if (m % 3 == 2) {
      // some prime == 2 (mod 3) has odd exponent, so the sum vanishes
      CHECK(legendre3_divisor_sum(m) == Int(0));
      CHECK(b_star(m) == Int(0));
    } else {
      CHECK(b_star(m) == Int(0));
    }
  }
}

TEST_CASE("vanishing certificates") {
  const VanishCertificate at3 = vanishes(3);
  CHECK(at3.vanishes);
  CHECK(at3.shifted == 10);
  CHECK(at3.witness == 2);
  CHECK(at3.certifying == std::vector<std::uint64_t>{2, 5});

  const VanishCertificate at0 = vanishes(0);
  CHECK_FALSE(at0.vanishes);
  CHECK(at0.shifted == 1);
  CHECK(at0.certifying.empty());

  const VanishCertificate at16 = vanishes(16);
  CHECK_FALSE(at16.vanishes);
  CHECK(at16.shifted == 49);
}

TEST_CASE("index-shift wrappers") {
  CHECK(a_coeff(4) == Int(-70));
  CHECK(b_coeff(4) == Int(2));
  CHECK(a_coeff(0) == Int(1));
  CHECK(b_coeff(0) == Int(1));
  CHECK(a_coeff(3) == Int(0));
  CHECK(b_coeff(3) == Int(0));
}

TEST_CASE("bulk tables match the per-value route") {
  const SpfSieve sieve(3000);
  const auto a_table = a_star_table(3000, sieve);
  const auto b_table = b_star_table(3000, sieve);
  for (std::uint64_t m = 1; m <= 3000; ++m) {
    CAPTURE(m);
    CHECK(a_table[m] == a_star(m));
    CHECK(b_table[m] == b_star(m));
  }
}

TEST_CASE("isqrt edges") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(3) == 1);
  CHECK(isqrt(4) == 2);
  CHECK(isqrt(UINT64_MAX) == 4294967295ull);
  Rng rng;
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = rng.next();
    const std::uint64_t r = isqrt(n);
    CHECK(static_cast<unsigned __int128>(r) * r <= n);
    CHECK(static_cast<unsigned __int128>(r + 1) * (r + 1) > n);
  }
}
