#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corz/bigint.hpp"

namespace corz {

/// An integer partition: weakly decreasing positive parts. Immutable value type.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts and drops zero parts; throws on negative entries.
  static Partition from_unsorted(std::vector<int> parts);

  int size() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Multiset of hook lengths of a Young diagram.
struct HookMultiset {
  std::map<int, int> counts;  // hook length -> multiplicity
  int total = 0;              // number of cells

  bool contains(int h) const { return counts.count(h) != 0; }
  int max() const { return counts.empty() ? 0 : counts.rbegin()->first; }
  /// Hook lengths in descending order with repetition.
  std::vector<int> sorted_desc() const;
  friend bool operator==(const HookMultiset&, const HookMultiset&) = default;
};

Partition conjugate(const Partition& lam);
HookMultiset hook_multiset(const Partition& lam);

/// No hook length divisible by ell.
bool is_core(const Partition& lam, int ell);
/// No part divisible by a (the "no multiple of a" convention).
bool is_regular(const Partition& lam, int a);

/// Exact p(0..max_n) from Euler's pentagonal-number recurrence.
std::vector<BigCount> partition_counts(int max_n);
BigCount count_p(int n);

/// Exact p_A(0..max_n): coefficients of prod (1 - q^{Ak}) / (1 - q^k).
std::vector<BigCount> regular_partition_counts(int max_n, int a);
BigCount count_p_regular(int n, int a);

/// Streams the partitions of n in reverse-lexicographic order, (n) first and
/// (1^n) last. Single consumer.
class PartitionStream {
 public:
  explicit PartitionStream(int n);
  std::optional<Partition> next();

 private:
  std::vector<int> current_;
  bool done_ = false;
  bool started_ = false;
};

std::vector<Partition> enumerate_partitions(int n);
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

/// Hardy-Ramanujan main term for p(n).
double hr_estimate(int n);
/// Hagis main term for p_A(n), without the (1 + O(n^{-1/2})) factor.
double hagis_estimate(int n, int a);

}  // namespace corz
