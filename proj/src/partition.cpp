#include "threecore/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace threecore {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

namespace {

void check_cap(int n, int cap) {
  if (n < 0) throw std::invalid_argument("partition enumeration: negative n");
  if (n > cap)
    throw std::invalid_argument("partition enumeration: n = " +
                                std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
}

}  // namespace

// ZS1-style generator: starts at [n] and repeatedly folds the rightmost
// part > 1, which yields exactly the reverse-lexicographic order.
void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit,
                        int cap) {
  check_cap(n, cap);
  if (n == 0) {
    visit({});
    return;
  }
  std::vector<int> x(static_cast<std::size_t>(n), 1);
  x[0] = n;
  int m = 1;  // number of active parts
  int h = 1;  // 1-based index of the last part > 1
  visit(std::span<const int>(x.data(), static_cast<std::size_t>(m)));
  while (x[0] != 1) {
    if (x[static_cast<std::size_t>(h) - 1] == 2) {
      ++m;
      x[static_cast<std::size_t>(h) - 1] = 1;
      --h;
    } else {
      const int r = x[static_cast<std::size_t>(h) - 1] - 1;
      int t = m - h + 1;
      x[static_cast<std::size_t>(h) - 1] = r;
      while (t >= r) {
        x[static_cast<std::size_t>(h)] = r;
        ++h;
        t -= r;
      }
      if (t == 0) {
        m = h;
      } else {
        m = h + 1;
        if (t > 1) {
          x[static_cast<std::size_t>(h)] = t;
          ++h;
        }
      }
    }
    visit(std::span<const int>(x.data(), static_cast<std::size_t>(m)));
  }
}

std::vector<Partition> enumerate_partitions(int n, int cap) {
  std::vector<Partition> out;
  for_each_partition(
      n,
      [&out](std::span<const int> parts) {
        out.emplace_back(Partition(std::vector<int>(parts.begin(), parts.end())));
      },
      cap);
  return out;
}

namespace detail {

void conjugate_into(std::span<const int> parts, std::vector<int>& conj) {
  conj.clear();
  if (parts.empty()) return;
  conj.resize(static_cast<std::size_t>(parts[0]), 0);
  // conj[j] = number of rows with at least j+1 cells
  for (int row : parts) {
    for (int j = 0; j < row; ++j) ++conj[static_cast<std::size_t>(j)];
  }
}

void hook_lengths_into(std::span<const int> parts, std::span<const int> conj,
                       std::vector<int>& hooks) {
  hooks.clear();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      // h(i,j) = lambda_i - j + lambda'_j - i - 1 with 0-based i, j
      hooks.push_back(parts[i] - j + conj[static_cast<std::size_t>(j)] -
                      static_cast<int>(i) - 1);
    }
  }
}

bool is_t_core_spans(std::span<const int> parts, std::span<const int> conj, int t) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      const int hook = parts[i] - j + conj[static_cast<std::size_t>(j)] -
                       static_cast<int>(i) - 1;
      if (hook % t == 0) return false;
    }
  }
  return true;
}

}  // namespace detail

Partition conjugate(const Partition& lambda) {
  std::vector<int> conj;
  detail::conjugate_into(lambda.parts(), conj);
  return Partition(std::move(conj));
}

HookMultiset hook_lengths(const Partition& lambda) {
  std::vector<int> conj;
  detail::conjugate_into(lambda.parts(), conj);
  HookMultiset out;
  detail::hook_lengths_into(lambda.parts(), conj, out.hooks);
  std::sort(out.hooks.begin(), out.hooks.end());
  return out;
}

bool is_t_core(const Partition& lambda, int t) {
  if (t < 2) throw std::invalid_argument("is_t_core: t must be >= 2");
  std::vector<int> conj;
  detail::conjugate_into(lambda.parts(), conj);
  return detail::is_t_core_spans(lambda.parts(), conj, t);
}

std::int64_t count_t_cores(int n, int t, int cap) {
  if (t < 2) throw std::invalid_argument("count_t_cores: t must be >= 2");
  std::int64_t count = 0;
  std::vector<int> conj;
  for_each_partition(
      n,
      [&](std::span<const int> parts) {
        detail::conjugate_into(parts, conj);
        if (detail::is_t_core_spans(parts, conj, t)) ++count;
      },
      cap);
  return count;
}

}  // namespace threecore
