#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "threecore/partition.hpp"
#include "threecore/rational.hpp"
#include "threecore/series.hpp"

namespace threecore {

// The partition-sum side of the Nekrasov-Okounkov identity
//   sum_lambda x^|lambda| prod_{h in H(lambda)} (1 - z/h^2)
//     = prod_{n>=1} (1 - x^n)^{z-1}.

// Exact product of (1 - z/h^2) over the hook multiset; 1 for the empty
// partition. Never divides by zero since every hook is >= 1.
Rational hook_weight(const Partition& lambda, std::int64_t z);

// Single coefficient: sum of hook_weight over all partitions of n.
// Accumulated over the common denominator (n!)^2, reduced once at the end.
Rational hook_sum_coefficient(std::int64_t z, int n, int cap = kEnumerationCap);

// Series of hook sums to precision N. By the identity above each
// coefficient is an integer; a coefficient that fails to reduce to one
// signals an implementation bug and throws std::logic_error.
IntSeries hook_sum_series(std::int64_t z, int N, int cap = kEnumerationCap);

// Same, for several z values sharing a single enumeration pass per n.
std::vector<IntSeries> hook_sum_series_multi(std::span<const std::int64_t> zs,
                                             int N, int cap = kEnumerationCap);

}  // namespace threecore
