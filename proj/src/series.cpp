#include "threecore/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace threecore {

IntSeries::IntSeries(int precision) {
  if (precision < 0) throw std::invalid_argument("IntSeries: negative precision");
  c_.assign(static_cast<std::size_t>(precision) + 1, Int(0));
}

IntSeries IntSeries::one(int precision) {
  IntSeries s(precision);
  s.c_[0] = Int(1);
  return s;
}

IntSeries IntSeries::from_coefficients(std::vector<Int> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("IntSeries: empty coefficient list");
  IntSeries s(0);
  s.c_ = std::move(coeffs);
  return s;
}

std::size_t IntSeries::nonzero_count() const {
  std::size_t n = 0;
  for (const Int& v : c_)
    if (!v.is_zero()) ++n;
  return n;
}

IntSeries IntSeries::truncated(int precision) const {
  if (precision > this->precision())
    throw std::invalid_argument("IntSeries: cannot extend precision");
  IntSeries out(precision);
  std::copy(c_.begin(), c_.begin() + precision + 1, out.c_.begin());
  return out;
}

IntSeries& IntSeries::operator+=(const IntSeries& rhs) {
  if (rhs.precision() < precision()) *this = truncated(rhs.precision());
  for (int n = 0; n <= precision(); ++n) at(n) += rhs[n];
  return *this;
}

IntSeries& IntSeries::operator-=(const IntSeries& rhs) {
  if (rhs.precision() < precision()) *this = truncated(rhs.precision());
  for (int n = 0; n <= precision(); ++n) at(n) -= rhs[n];
  return *this;
}

IntSeries operator+(IntSeries lhs, const IntSeries& rhs) { lhs += rhs; return lhs; }
IntSeries operator-(IntSeries lhs, const IntSeries& rhs) { lhs -= rhs; return lhs; }

IntSeries operator*(const IntSeries& lhs, const IntSeries& rhs) {
  const int N = std::min(lhs.precision(), rhs.precision());
  const IntSeries& outer = lhs.nonzero_count() <= rhs.nonzero_count() ? lhs : rhs;
  const IntSeries& inner = &outer == &lhs ? rhs : lhs;
  IntSeries out(N);
  for (int j = 0; j <= std::min(N, outer.precision()); ++j) {
    if (outer[j].is_zero()) continue;
    for (int i = 0; i + j <= N; ++i) {
      if (inner[i].is_zero()) continue;
      out.at(i + j) += outer[j] * inner[i];
    }
  }
  return out;
}

bool agree_to_shared_precision(const IntSeries& a, const IntSeries& b) {
  return first_disagreement(a, b) < 0;
}

int first_disagreement(const IntSeries& a, const IntSeries& b) {
  const int N = std::min(a.precision(), b.precision());
  for (int n = 0; n <= N; ++n)
    if (a[n] != b[n]) return n;
  return -1;
}

namespace detail {

std::vector<std::pair<int, int>> pentagonal_terms(int N, int stride) {
  std::vector<std::pair<int, int>> terms{{0, 1}};
  for (std::int64_t j = 1;; ++j) {
    const std::int64_t g1 = j * (3 * j - 1) / 2 * stride;
    const std::int64_t g2 = j * (3 * j + 1) / 2 * stride;
    const int sign = (j % 2 == 0) ? 1 : -1;
    if (g1 > N) break;
    terms.emplace_back(static_cast<int>(g1), sign);
    if (g2 <= N) terms.emplace_back(static_cast<int>(g2), sign);
  }
  std::sort(terms.begin(), terms.end());
  return terms;
}

void mul_sparse_inplace(IntSeries& f, const std::vector<std::pair<int, int>>& sparse) {
  const int N = f.precision();
  for (int n = N; n >= 0; --n) {
    Int acc = f[n];  // (0, 1) term
    for (const auto& [j, c] : sparse) {
      if (j == 0) continue;
      if (j > n) break;
      if (c > 0)
        acc += f[n - j];
      else
        acc -= f[n - j];
    }
    f.at(n) = std::move(acc);
  }
}

void div_sparse_inplace(IntSeries& f, const std::vector<std::pair<int, int>>& sparse) {
  const int N = f.precision();
  for (int n = 0; n <= N; ++n) {
    Int acc = f[n];
    for (const auto& [j, c] : sparse) {
      if (j == 0) continue;
      if (j > n) break;
      if (c > 0)
        acc -= f[n - j];
      else
        acc += f[n - j];
    }
    f.at(n) = std::move(acc);
  }
}

}  // namespace detail

IntSeries euler_power(int k, int N) {
  const auto base = detail::pentagonal_terms(N, 1);
  IntSeries f = IntSeries::one(N);
  for (int i = 0; i < std::abs(k); ++i) {
    if (k > 0)
      detail::mul_sparse_inplace(f, base);
    else
      detail::div_sparse_inplace(f, base);
  }
  return f;
}

IntSeries tcore_series(int t, int N) {
  if (t < 1) throw std::invalid_argument("tcore_series: t must be >= 1");
  const auto numerator = detail::pentagonal_terms(N, t);
  IntSeries f = IntSeries::one(N);
  for (int i = 0; i < t; ++i) detail::mul_sparse_inplace(f, numerator);
  detail::div_sparse_inplace(f, detail::pentagonal_terms(N, 1));
  return f;
}

IntSeries jacobi_cube(int N) {
  IntSeries f(N);
  for (std::int64_t k = 0;; ++k) {
    const std::int64_t idx = k * (k + 1) / 2;
    if (idx > N) break;
    f.at(static_cast<int>(idx)) = Int((k % 2 == 0 ? 1 : -1) * (2 * k + 1));
  }
  return f;
}

IntSeries theta_hexagonal(int N) {
  IntSeries f(N);
  const int window =
      static_cast<int>(std::ceil(2.0 * std::sqrt(static_cast<double>(N) / 3.0)));
  for (std::int64_t x = -window; x <= window; ++x) {
    for (std::int64_t y = -window; y <= window; ++y) {
      const std::int64_t v = x * x + x * y + y * y;
      if (v <= N) f.at(static_cast<int>(v)) += Int(1);
    }
  }
  return f;
}

IntSeries twist_residue(const IntSeries& f, int r, int m) {
  if (m < 1 || r < 0 || r >= m)
    throw std::invalid_argument("twist_residue: need 0 <= r < m");
  IntSeries out(f.precision());
  for (int n = r; n <= f.precision(); n += m) out.at(n) = f[n];
  return out;
}

IntSeries reindex_3n_plus_1(const IntSeries& f) {
  IntSeries out(3 * f.precision() + 1);
  for (int n = 0; n <= f.precision(); ++n) out.at(3 * n + 1) = f[n];
  return out;
}

}  // namespace threecore
