#include "threecore/hook_sum.hpp"

#include <stdexcept>
#include <string>

namespace threecore {

namespace {

// Per-partition numerator over the common denominator (n!)^2:
//   (n!/prod h)^2 * prod (h^2 - z)
// n!/prod h is the number of standard Young tableaux, so the division is
// exact; one big division per partition, no gcd in the loop.
void accumulate_numerators(std::span<const std::int64_t> zs, int n,
                           const Int& n_factorial, std::span<Int> totals,
                           int cap) {
  std::vector<int> conj, hooks;
  std::vector<Int> z_values(zs.begin(), zs.end());
  for_each_partition(
      n,
      [&](std::span<const int> parts) {
        detail::conjugate_into(parts, conj);
        detail::hook_lengths_into(parts, conj, hooks);
        Int hook_product(1);
        for (int h : hooks) hook_product *= Int(h);
        Int tableaux = n_factorial / hook_product;
        const Int tableaux_sq = tableaux * tableaux;
        for (std::size_t k = 0; k < z_values.size(); ++k) {
          Int z_product(1);
          for (int h : hooks) {
            z_product *= Int(static_cast<std::int64_t>(h) * h) - z_values[k];
            if (z_product.is_zero()) break;
          }
          if (!z_product.is_zero()) totals[k] += tableaux_sq * z_product;
        }
      },
      cap);
}

}  // namespace

Rational hook_weight(const Partition& lambda, std::int64_t z) {
  Int numerator(1), hook_product(1);
  for (int h : hook_lengths(lambda).hooks) {
    numerator *= Int(static_cast<std::int64_t>(h) * h) - Int(z);
    hook_product *= Int(h);
  }
  return Rational(std::move(numerator), hook_product * hook_product);
}

Rational hook_sum_coefficient(std::int64_t z, int n, int cap) {
  const Int n_factorial = factorial(n);
  Int total(0);
  const std::int64_t zs[] = {z};
  accumulate_numerators(zs, n, n_factorial, std::span<Int>(&total, 1), cap);
  return Rational(std::move(total), n_factorial * n_factorial);
}

std::vector<IntSeries> hook_sum_series_multi(std::span<const std::int64_t> zs,
                                             int N, int cap) {
  if (N > cap)
    throw std::invalid_argument("hook_sum_series: precision " +
                                std::to_string(N) + " exceeds enumeration cap " +
                                std::to_string(cap));
  std::vector<IntSeries> out(zs.size(), IntSeries(N));
  std::vector<Int> totals(zs.size());
  Int n_factorial(1);
  for (int n = 0; n <= N; ++n) {
    if (n > 0) n_factorial *= Int(n);
    for (Int& t : totals) t = Int(0);
    accumulate_numerators(zs, n, n_factorial, totals, cap);
    const Int denominator = n_factorial * n_factorial;
    for (std::size_t k = 0; k < zs.size(); ++k) {
      Rational coeff(totals[k], denominator);
      if (!coeff.is_integer())
        throw std::logic_error(
            "hook_sum_series: non-integer coefficient at n = " +
            std::to_string(n) + " (z = " + std::to_string(zs[k]) + ")");
      out[k].at(n) = coeff.num();
    }
  }
  return out;
}

IntSeries hook_sum_series(std::int64_t z, int N, int cap) {
  const std::int64_t zs[] = {z};
  return std::move(hook_sum_series_multi(zs, N, cap)[0]);
}

}  // namespace threecore
