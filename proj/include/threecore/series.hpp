#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "threecore/bigint.hpp"

namespace threecore {

// Truncated formal power series with exact integer coefficients, indexed
// 0..precision inclusive. Coefficients beyond the precision are unknown, not
// zero, so arithmetic on two series is carried out at the smaller precision
// and comparisons should use agree_to_shared_precision.
class IntSeries {
 public:
  explicit IntSeries(int precision);
  static IntSeries one(int precision);
  static IntSeries from_coefficients(std::vector<Int> coeffs);  // precision = size-1

  int precision() const { return static_cast<int>(c_.size()) - 1; }
  const Int& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
  Int& at(int n) { return c_[static_cast<std::size_t>(n)]; }
  const std::vector<Int>& coefficients() const { return c_; }

  std::size_t nonzero_count() const;
  IntSeries truncated(int precision) const;  // precision <= current

  IntSeries& operator+=(const IntSeries& rhs);
  IntSeries& operator-=(const IntSeries& rhs);
  friend IntSeries operator+(IntSeries lhs, const IntSeries& rhs);
  friend IntSeries operator-(IntSeries lhs, const IntSeries& rhs);

  // Cauchy product at the shared precision. The operand with fewer nonzero
  // coefficients drives the outer loop, so multiplying by a sparse series
  // costs O(precision * nonzeros).
  friend IntSeries operator*(const IntSeries& lhs, const IntSeries& rhs);

  // Exact comparison: same precision and identical coefficients.
  friend bool operator==(const IntSeries&, const IntSeries&) = default;

 private:
  std::vector<Int> c_;
};

// Equality of coefficients up to min(precision_a, precision_b).
bool agree_to_shared_precision(const IntSeries& a, const IntSeries& b);
// First index <= shared precision where the two disagree, or -1.
int first_disagreement(const IntSeries& a, const IntSeries& b);

// prod_{n>=1} (1 - x^n)^k to precision N; k may be negative (k = -1 is the
// partition number generating function). Expanded from the sparse pentagonal
// form of the base product, one multiplication or exact division per unit
// of |k|, O(|k| N sqrt(N)) total.
IntSeries euler_power(int k, int N);

// Generating function for t-core partition counts,
// prod (1 - x^{tn})^t / (1 - x^n), t >= 1 (t = 1 collapses to 1).
IntSeries tcore_series(int t, int N);

// Cube of the Euler product in closed form: coefficient (-1)^k (2k+1) at the
// triangular index k(k+1)/2, zero elsewhere.
IntSeries jacobi_cube(int N);

// Number of lattice points with x^2 + xy + y^2 = n for each n <= N, by
// enumeration over the window |x|, |y| <= ceil(2 sqrt(N/3)) (the form is
// >= 3/4 max(x,y)^2).
IntSeries theta_hexagonal(int N);

// Keeps coefficients at indices congruent to r mod m, zeroes the rest.
IntSeries twist_residue(const IntSeries& f, int r, int m);

// Coefficient of x^n moves to index 3n+1; all other indices carry zero.
// Output precision is 3*precision(f) + 1.
IntSeries reindex_3n_plus_1(const IntSeries& f);

namespace detail {
// (exponent, +-1) pairs of prod (1 - x^{stride * n}) up to N, constant term
// included; pentagonal number theorem.
std::vector<std::pair<int, int>> pentagonal_terms(int N, int stride);
// f *= sparse  /  f /= sparse, both in place; sparse[0] must be (0, 1).
void mul_sparse_inplace(IntSeries& f, const std::vector<std::pair<int, int>>& sparse);
void div_sparse_inplace(IntSeries& f, const std::vector<std::pair<int, int>>& sparse);
}  // namespace detail

}  // namespace threecore
