#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <vector>

#include "threecore/io.hpp"
#include "threecore/partition.hpp"
#include "threecore/series.hpp"

using namespace threecore;

namespace {

void check_indices(const IntSeries& s, const std::map<int, std::int64_t>& expected) {
  for (const auto& [n, v] : expected) {
    CAPTURE(n);
    CHECK(s[n] == Int(v));
  }
}

// Independent big-value oracle: n p(n) = sum_{k=1}^{n} sigma(k) p(n-k).
Int partition_number_by_sigma_recurrence(int target) {
  std::vector<std::int64_t> sigma(static_cast<std::size_t>(target) + 1, 0);
  for (int d = 1; d <= target; ++d)
    for (int m = d; m <= target; m += d) sigma[static_cast<std::size_t>(m)] += d;
  std::vector<Int> p(static_cast<std::size_t>(target) + 1, Int(0));
  p[0] = Int(1);
  for (int n = 1; n <= target; ++n) {
    Int total(0);
    for (int k = 1; k <= n; ++k)
      total += Int(sigma[static_cast<std::size_t>(k)]) *
               p[static_cast<std::size_t>(n - k)];
    p[static_cast<std::size_t>(n)] = total / Int(n);
  }
  return p[static_cast<std::size_t>(target)];
}

}  // namespace

TEST_CASE("product fixtures") {
  IntSeries one_plus(2), one_minus(2);
  one_plus.at(0) = Int(1);
  one_plus.at(1) = Int(1);
  one_minus.at(0) = Int(1);
  one_minus.at(1) = Int(-1);
  const IntSeries prod = one_plus * one_minus;
  CHECK(prod[0] == Int(1));
  CHECK(prod[1] == Int(0));
  CHECK(prod[2] == Int(-1));

  const IntSeries f = euler_power(8, 30);
  CHECK(f * IntSeries::one(30) == f);

  IntSeries geometric(5), step(5);
  for (int n = 0; n <= 5; ++n) geometric.at(n) = Int(1);
  step.at(0) = Int(1);
  step.at(1) = Int(-1);
  CHECK(geometric * step == IntSeries::one(5));
}

TEST_CASE("truncation semantics") {
  const IntSeries f = euler_power(8, 30);
  const IntSeries g = euler_power(8, 12);
  CHECK((f * g).precision() == 12);
  CHECK(agree_to_shared_precision(f, g));
  CHECK(f.truncated(12) == g);
  CHECK_THROWS_AS(g.truncated(13), std::invalid_argument);
  IntSeries h = g;
  h.at(7) += Int(1);
  CHECK(first_disagreement(f, h) == 7);
}

TEST_CASE("eighth power of the Euler product") {
  const IntSeries f = euler_power(8, 20);
  check_indices(f, {{0, 1},
                    {1, -8},
                    {2, 20},
                    {3, 0},
                    {4, -70},
                    {14, -520},
                    {16, 57},
                    {17, 560},
                    {20, 182}});
}

TEST_CASE("fifteenth power leading terms") {
  const IntSeries f = euler_power(15, 54);
  check_indices(f, {{0, 1}, {1, -15}, {2, 90}, {52, 641445}, {53, 0}, {54, 1537330}});
}

TEST_CASE("zeroth and negative powers") {
  CHECK(euler_power(0, 10) == IntSeries::one(10));
  const IntSeries p = euler_power(-1, 6);
  check_indices(p, {{0, 1}, {1, 1}, {2, 2}, {3, 3}, {4, 5}, {5, 7}, {6, 11}});
}

TEST_CASE("partition numbers stay exact far beyond int64") {
  const IntSeries p = euler_power(-1, 500);
  CHECK(p[500] == partition_number_by_sigma_recurrence(500));
  CHECK_FALSE(p[500].fits_int64());
}

TEST_CASE("exponent additivity") {
  const int N = 200;
  std::map<int, IntSeries> powers;
  for (int k = -4; k <= 6; ++k) powers.emplace(k, euler_power(k, N));
  for (int a = -2; a <= 3; ++a)
    for (int b = -2; b <= 3; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(powers.at(a) * powers.at(b) == powers.at(a + b));
    }
}

TEST_CASE("inverse powers multiply to one") {
  const int N = 200;
  for (int k : {1, 3, 8})
    CHECK(euler_power(k, N) * euler_power(-k, N) == IntSeries::one(N));
}

TEST_CASE("3-core generating function") {
  const IntSeries c3 = tcore_series(3, 20);
  check_indices(c3, {{0, 1},
                     {1, 1},
                     {2, 2},
                     {3, 0},
                     {4, 2},
                     {14, 2},
                     {16, 3},
                     {17, 2},
                     {20, 2}});
}

TEST_CASE("4-core generating function near index 53") {
  const IntSeries c4 = tcore_series(4, 54);
  check_indices(c4, {{0, 1}, {1, 1}, {2, 2}, {3, 3}, {52, 5}, {53, 8}, {54, 10}});
}

TEST_CASE("2-core series is the triangular indicator") {
  const IntSeries c2 = tcore_series(2, 10);
  for (int n = 0; n <= 10; ++n) {
    const bool triangular = n == 0 || n == 1 || n == 3 || n == 6 || n == 10;
    CHECK(c2[n] == Int(triangular ? 1 : 0));
  }
}

TEST_CASE("degenerate t = 1 collapses to one") {
  CHECK(tcore_series(1, 50) == IntSeries::one(50));
  CHECK_THROWS_AS(tcore_series(0, 5), std::invalid_argument);
}

TEST_CASE("t-core coefficients are nonnegative and count the t-cores") {
  for (int t = 2; t <= 6; ++t) {
    const IntSeries c = tcore_series(t, 500);
    for (int n = 0; n <= 500; ++n) CHECK(c[n].signum() >= 0);
  }
  for (int t = 2; t <= 5; ++t) {
    const IntSeries c = tcore_series(t, 50);
    for (int n = 0; n <= 50; ++n) {
      CAPTURE(t);
      CAPTURE(n);
      CHECK(c[n] == Int(count_t_cores(n, t)));
    }
  }
}

TEST_CASE("odd-weight triangular closed form") {
  const IntSeries j = jacobi_cube(10);
  check_indices(j, {{0, 1}, {1, -3}, {2, 0}, {3, 5}, {6, -7}, {10, 9}});
  CHECK(jacobi_cube(100) == euler_power(3, 100));
}

TEST_CASE("hexagonal lattice counts") {
  const IntSeries theta = theta_hexagonal(16);
  check_indices(theta, {{0, 1},
                        {1, 6},
                        {2, 0},
                        {3, 6},
                        {4, 6},
                        {5, 0},
                        {7, 12},
                        {9, 6},
                        {13, 12}});
}

TEST_CASE("residue twist") {
  const IntSeries theta = theta_hexagonal(16);
  const IntSeries twisted = twist_residue(theta, 1, 3);
  check_indices(twisted, {{0, 0},
                          {1, 6},
                          {2, 0},
                          {3, 0},
                          {4, 6},
                          {7, 12},
                          {9, 0},
                          {10, 0},
                          {13, 12},
                          {16, 6}});
  CHECK(twist_residue(theta, 0, 1) == theta);
  CHECK(twist_residue(IntSeries(20), 2, 5) == IntSeries(20));
  CHECK_THROWS_AS(twist_residue(theta, 3, 3), std::invalid_argument);
}

TEST_CASE("twisted theta is six times the reindexed 3-core series") {
  const IntSeries twisted = twist_residue(theta_hexagonal(301), 1, 3);
  const IntSeries b = reindex_3n_plus_1(tcore_series(3, 100));
  for (int m = 0; m <= 301; ++m) CHECK(twisted[m] == Int(6) * b[m]);
}

TEST_CASE("reindexing onto 3n+1") {
  const IntSeries a = reindex_3n_plus_1(euler_power(8, 9));
  CHECK(a.precision() == 28);
  check_indices(a, {{0, 0},
                    {1, 1},
                    {2, 0},
                    {3, 0},
                    {4, -8},
                    {7, 20},
                    {13, -70},
                    {16, 64},
                    {19, 56},
                    {25, -125},
                    {28, -160}});
  const IntSeries b = reindex_3n_plus_1(tcore_series(3, 9));
  check_indices(b, {{1, 1}, {4, 1}, {7, 2}, {13, 2}, {16, 1}, {19, 2}, {25, 1}, {28, 2}});
  CHECK(reindex_3n_plus_1(IntSeries(5)) == IntSeries(16));
}

TEST_CASE("json serialization round-trips byte-identically") {
  const IntSeries f = euler_power(-1, 450);  // wide coefficients included
  const std::string emitted = series_to_json(f).dump();
  const IntSeries parsed = series_from_json(nlohmann::json::parse(emitted));
  CHECK(parsed == f);
  CHECK(series_to_json(parsed).dump() == emitted);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::array()), std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::object()), std::invalid_argument);
}

TEST_CASE("csv serialization round-trips byte-identically") {
  const IntSeries f = euler_power(8, 64);
  const std::string emitted = series_to_csv(f);
  const IntSeries parsed = series_from_csv(emitted);
  CHECK(parsed == f);
  CHECK(series_to_csv(parsed) == emitted);
  CHECK_THROWS_AS(series_from_csv("bogus\n0,1\n"), std::invalid_argument);
  CHECK_THROWS_AS(series_from_csv("index,value\n1,5\n"), std::invalid_argument);
  CHECK_THROWS_AS(series_from_csv("index,value\n"), std::invalid_argument);
}
