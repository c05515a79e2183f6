#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "threecore/rational.hpp"

namespace threecore {

struct Mismatch {
  std::string what;    // which pair of routes disagreed
  std::int64_t index;  // coefficient / q-power index
  std::string left;
  std::string right;
};

// Outcome of one cross-route campaign. passed holds exactly when
// mismatches is empty; elapsed_seconds is wall time and is the only
// non-deterministic field.
struct VerificationReport {
  std::string campaign;
  std::vector<std::pair<std::string, std::int64_t>> ranges;
  std::vector<Mismatch> mismatches;
  bool passed = true;
  double elapsed_seconds = 0.0;
};

// Called as each mismatch is found, before it lands in the report.
using MismatchSink = std::function<void(const Mismatch&)>;

// Euler-product cube vs the odd-weight triangular closed form, and the
// 2-core series vs the 0/1 triangular indicator.
VerificationReport verify_jacobi(int limit = 2000, const MismatchSink& sink = {});

// Hook-length partition sums vs Euler-product powers at z - 1.
VerificationReport verify_hook_formula(int limit = 40,
                                       std::vector<std::int64_t> zs = {1, 2, 3, 4,
                                                                       9, 16},
                                       const MismatchSink& sink = {});

// 3-core counts by all four routes: multiplicative closed form vs literal
// divisor sum (to formula_limit), vs the eta-quotient series (to
// series_precision in x), vs brute-force enumeration (to brute_limit).
VerificationReport verify_three_core(int brute_limit = 50,
                                     int series_precision = 10000,
                                     std::uint64_t formula_limit = 100000,
                                     const MismatchSink& sink = {});

// Zero-set equivalence sweep (formula route) with a series audit of both
// coefficient families up to audit_precision.
VerificationReport verify_theorem1(std::uint64_t limit = 100000,
                                   int audit_precision = 10000,
                                   const MismatchSink& sink = {});

// Hexagonal-lattice theta: leading terms, and its 1 (mod 3) twist equal to
// six times the reindexed 3-core series.
VerificationReport verify_theta(int limit = 2000, const MismatchSink& sink = {});

// The t = 4 failure of the support-matching pattern: coefficient 53
// vanishes in the z = 16 hook series but not in the 4-core series.
VerificationReport verify_counterexample_t4(const MismatchSink& sink = {});

// Zero-density rows for the lacunarity sweep; ratio = zeros / (X + 1).
struct DensityRow {
  std::uint64_t bound = 0;
  std::uint64_t zeros = 0;
  Rational ratio;
};

std::vector<DensityRow> density_table(std::vector<std::uint64_t> bounds);

}  // namespace threecore
