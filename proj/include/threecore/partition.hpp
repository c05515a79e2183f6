#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace threecore {

// Partitions of n above this bound are refused rather than enumerated;
// p(100) is already ~1.9e8.
inline constexpr int kEnumerationCap = 100;

// Weakly decreasing positive parts. The empty partition has weight 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // validates, throws std::invalid_argument

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Hook lengths of a Young diagram, kept sorted ascending so multiset
// equality is plain vector equality.
struct HookMultiset {
  std::vector<int> hooks;
  friend bool operator==(const HookMultiset&, const HookMultiset&) = default;
};

// Visits every partition of n exactly once, largest part first, in
// reverse-lexicographic order on the part sequences. The span passed to the
// visitor is only valid during the call.
void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit,
                        int cap = kEnumerationCap);

// Materialized enumeration in the same order; count equals p(n).
std::vector<Partition> enumerate_partitions(int n, int cap = kEnumerationCap);

Partition conjugate(const Partition& lambda);

HookMultiset hook_lengths(const Partition& lambda);

// True iff no hook length is a multiple of t (t >= 2). The empty partition
// is a t-core for every t.
bool is_t_core(const Partition& lambda, int t);

// Number of t-core partitions of n; the coefficient of x^n in the t-core
// generating function.
std::int64_t count_t_cores(int n, int t, int cap = kEnumerationCap);

namespace detail {

// Low-level kernels shared by the enumeration sweeps: no allocation beyond
// the caller's buffers, hooks emitted row-major and unsorted.
void conjugate_into(std::span<const int> parts, std::vector<int>& conj);
void hook_lengths_into(std::span<const int> parts, std::span<const int> conj,
                       std::vector<int>& hooks);
bool is_t_core_spans(std::span<const int> parts, std::span<const int> conj, int t);

}  // namespace detail

}  // namespace threecore
