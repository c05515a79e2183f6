#include "threecore/verify.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>

#include "threecore/cm_formula.hpp"
#include "threecore/hook_sum.hpp"
#include "threecore/parallel.hpp"
#include "threecore/partition.hpp"
#include "threecore/series.hpp"

namespace threecore {

namespace {

class Campaign {
 public:
  Campaign(std::string name, const MismatchSink& sink)
      : sink_(sink), start_(std::chrono::steady_clock::now()) {
    report_.campaign = std::move(name);
  }

  void range(std::string key, std::int64_t value) {
    report_.ranges.emplace_back(std::move(key), value);
  }

  void mismatch(std::string what, std::int64_t index, std::string left,
                std::string right) {
    Mismatch m{std::move(what), index, std::move(left), std::move(right)};
    std::lock_guard lock(mu_);
    if (sink_) sink_(m);
    report_.mismatches.push_back(std::move(m));
  }

  void compare(const std::string& what, std::int64_t index, const Int& left,
               const Int& right) {
    if (left != right) mismatch(what, index, left.to_string(), right.to_string());
  }

  // coefficient-by-coefficient comparison at the shared precision
  void compare_series(const std::string& what, const IntSeries& left,
                      const IntSeries& right) {
    const int n = std::min(left.precision(), right.precision());
    for (int i = 0; i <= n; ++i) compare(what, i, left[i], right[i]);
  }

  VerificationReport finish() {
    // deterministic order regardless of worker timing
    std::stable_sort(report_.mismatches.begin(), report_.mismatches.end(),
                     [](const Mismatch& a, const Mismatch& b) {
                       if (a.what != b.what) return a.what < b.what;
                       return a.index < b.index;
                     });
    report_.passed = report_.mismatches.empty();
    report_.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  const MismatchSink& sink_;
  std::mutex mu_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

VerificationReport verify_jacobi(int limit, const MismatchSink& sink) {
  Campaign c("jacobi", sink);
  c.range("precision", limit);

  c.compare_series("euler_power(3) vs triangular closed form",
                   euler_power(3, limit), jacobi_cube(limit));

  IntSeries indicator(limit);
  for (std::int64_t k = 0; k * (k + 1) / 2 <= limit; ++k)
    indicator.at(static_cast<int>(k * (k + 1) / 2)) = Int(1);
  c.compare_series("2-core series vs triangular indicator",
                   tcore_series(2, limit), indicator);
  return c.finish();
}

VerificationReport verify_hook_formula(int limit, std::vector<std::int64_t> zs,
                                       const MismatchSink& sink) {
  Campaign c("no-formula", sink);
  c.range("precision", limit);

  const auto sums = hook_sum_series_multi(zs, limit);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const std::string what =
        "hook sum vs euler_power at z=" + std::to_string(zs[i]);
    c.compare_series(what, sums[i],
                     euler_power(static_cast<int>(zs[i]) - 1, limit));
  }
  return c.finish();
}

VerificationReport verify_three_core(int brute_limit, int series_precision,
                                     std::uint64_t formula_limit,
                                     const MismatchSink& sink) {
  Campaign c("three-core", sink);
  c.range("bruteforce", brute_limit);
  c.range("series", series_precision);
  c.range("formula", static_cast<std::int64_t>(formula_limit));

  const IntSeries eta = tcore_series(3, series_precision);
  const IntSeries reindexed = reindex_3n_plus_1(eta);

  const std::uint64_t table_limit =
      std::max<std::uint64_t>(formula_limit,
                              static_cast<std::uint64_t>(reindexed.precision()));
  const SpfSieve sieve(table_limit);
  const std::vector<Int> b_table = b_star_table(table_limit, sieve);

  // closed form vs literal divisor sum, via one harmonic-sum sieve
  {
    std::vector<std::int64_t> literal(formula_limit + 1, 0);
    for (std::uint64_t d = 1; d <= formula_limit; ++d) {
      const int chi = legendre3(d);
      if (chi == 0) continue;
      for (std::uint64_t m = d; m <= formula_limit; m += d)
        literal[m] += chi;
    }
    for (std::uint64_t m = 1; m <= formula_limit; ++m) {
      if (m % 3 == 1)
        c.compare("closed form vs literal divisor sum",
                  static_cast<std::int64_t>(m), b_table[m], Int(literal[m]));
      else if (m % 3 == 2 && literal[m] != 0)
        c.mismatch("literal divisor sum nonzero at m == 2 (mod 3)",
                   static_cast<std::int64_t>(m), std::to_string(literal[m]),
                   "0");
    }
  }

  // formula vs eta-quotient series at every q-index
  for (int m = 0; m <= reindexed.precision(); ++m)
    c.compare("divisor sum vs eta quotient", m,
              b_table[static_cast<std::uint64_t>(m)], reindexed[m]);

  // brute-force enumeration vs both
  for (int n = 0; n <= brute_limit; ++n) {
    const Int brute(count_t_cores(n, 3));
    c.compare("brute force vs eta quotient", n, brute, eta[n]);
    c.compare("brute force vs divisor sum", n, brute,
              b_table[static_cast<std::uint64_t>(3 * n + 1)]);
  }
  return c.finish();
}

VerificationReport verify_theorem1(std::uint64_t limit, int audit_precision,
                                   const MismatchSink& sink) {
  Campaign c("theorem1", sink);
  c.range("formula", static_cast<std::int64_t>(limit));
  c.range("series audit", audit_precision);

  const std::uint64_t shifted_limit = 3 * limit + 1;
  const SpfSieve sieve(shifted_limit);
  const std::vector<Int> a_table = a_star_table(shifted_limit, sieve);
  const std::vector<Int> b_table = b_star_table(shifted_limit, sieve);

  parallel_for(0, static_cast<std::int64_t>(limit) + 1,
               [&](std::int64_t lo, std::int64_t hi) {
                 for (std::int64_t n = lo; n < hi; ++n) {
                   const std::uint64_t m = 3 * static_cast<std::uint64_t>(n) + 1;
                   const bool a_zero = a_table[m].is_zero();
                   const bool b_zero = b_table[m].is_zero();
                   const bool vanish =
                       vanishes(sieve.factorize(m)).vanishes;
                   if (a_zero != b_zero)
                     c.mismatch("a zero-set vs b zero-set", n,
                                a_table[m].to_string(), b_table[m].to_string());
                   if (a_zero != vanish)
                     c.mismatch("a zero-set vs odd-order criterion", n,
                                a_table[m].to_string(),
                                vanish ? "vanishes" : "does not vanish");
                 }
               });

  // series spot audit on the q-index range both routes reach
  const IntSeries a_series = reindex_3n_plus_1(euler_power(8, audit_precision));
  const IntSeries b_series = reindex_3n_plus_1(tcore_series(3, audit_precision));
  for (int m = 0; m <= a_series.precision(); ++m) {
    c.compare("formula vs series (euler power 8)", m,
              a_table[static_cast<std::uint64_t>(m)], a_series[m]);
    c.compare("formula vs series (3-core)", m,
              b_table[static_cast<std::uint64_t>(m)], b_series[m]);
  }
  return c.finish();
}

VerificationReport verify_theta(int limit, const MismatchSink& sink) {
  Campaign c("theta", sink);
  c.range("precision", limit);

  const IntSeries theta = theta_hexagonal(limit);

  const Int lead[] = {Int(1), Int(6), Int(0), Int(6), Int(6),
                      Int(0), Int(0), Int(12), Int(0), Int(6)};
  for (int n = 0; n <= std::min(limit, 9); ++n)
    c.compare("theta leading terms", n, theta[n], lead[n]);

  const IntSeries twisted = twist_residue(theta, 1, 3);
  IntSeries b_scaled = reindex_3n_plus_1(tcore_series(3, limit / 3));
  for (int m = 0; m <= std::min(limit, b_scaled.precision()); ++m)
    c.compare("theta twist vs 6x 3-core series", m, twisted[m],
              Int(6) * b_scaled[m]);
  return c.finish();
}

VerificationReport verify_counterexample_t4(const MismatchSink& sink) {
  Campaign c("counterexample-t4", sink);
  c.range("precision", 54);

  const IntSeries f16 = euler_power(15, 54);
  const IntSeries c4 = tcore_series(4, 54);
  const Int f_expected[] = {Int(641445), Int(0), Int(1537330)};
  const Int c_expected[] = {Int(5), Int(8), Int(10)};
  for (int i = 0; i < 3; ++i) {
    c.compare("z=16 hook series coefficient", 52 + i, f16[52 + i], f_expected[i]);
    c.compare("4-core series coefficient", 52 + i, c4[52 + i], c_expected[i]);
  }
  // the support mismatch itself: 53 vanishes on one side only
  if (!f16[53].is_zero())
    c.mismatch("expected zero coefficient", 53, f16[53].to_string(), "0");
  if (c4[53].is_zero())
    c.mismatch("expected nonzero coefficient", 53, "0", "8");
  return c.finish();
}

std::vector<DensityRow> density_table(std::vector<std::uint64_t> bounds) {
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  std::vector<DensityRow> rows;
  if (bounds.empty()) return rows;

  const std::uint64_t max_bound = bounds.back();
  const SpfSieve sieve(3 * max_bound + 1);
  std::uint64_t zeros = 0;
  std::size_t next = 0;
  for (std::uint64_t n = 0; n <= max_bound; ++n) {
    if (vanishes(sieve.factorize(3 * n + 1)).vanishes) ++zeros;
    while (next < bounds.size() && bounds[next] == n) {
      rows.push_back({n, zeros,
                      Rational(Int(static_cast<std::int64_t>(zeros)),
                               Int(static_cast<std::int64_t>(n + 1)))});
      ++next;
    }
  }
  return rows;
}

}  // namespace threecore
