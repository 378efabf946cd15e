#include "corz/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "corz/power_series.hpp"

namespace corz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; }))
    throw std::invalid_argument("Partition: negative part");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

std::vector<int> HookMultiset::sorted_desc() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(total));
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) out.insert(out.end(), it->second, it->first);
  return out;
}

Partition conjugate(const Partition& lam) {
  std::vector<int> out(static_cast<std::size_t>(lam.largest()), 0);
  for (int part : lam.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

HookMultiset hook_multiset(const Partition& lam) {
  const Partition conj = conjugate(lam);
  HookMultiset hooks;
  // 0-based (k, j): h = (lam_k - k - 1) + (lam'_j - j - 1) + 1
  for (std::size_t k = 0; k < lam.length(); ++k)
    for (int j = 0; j < lam[k]; ++j) {
      const int h = (lam[k] - static_cast<int>(k)) + (conj[static_cast<std::size_t>(j)] - j) - 1;
      ++hooks.counts[h];
      ++hooks.total;
    }
  return hooks;
}

bool is_core(const Partition& lam, int ell) {
  if (ell < 2) throw std::invalid_argument("is_core: ell must be >= 2");
  const Partition conj = conjugate(lam);
  for (std::size_t k = 0; k < lam.length(); ++k)
    for (int j = 0; j < lam[k]; ++j)
      if (((lam[k] - static_cast<int>(k)) + (conj[static_cast<std::size_t>(j)] - j) - 1) % ell == 0) return false;
  return true;
}

bool is_regular(const Partition& lam, int a) {
  if (a < 2) throw std::invalid_argument("is_regular: modulus must be >= 2");
  return std::none_of(lam.parts().begin(), lam.parts().end(), [a](int p) { return p % a == 0; });
}

std::vector<BigCount> partition_counts(int max_n) {
  if (max_n < 0) throw std::invalid_argument("partition_counts: negative n");
  std::vector<BigCount> p(static_cast<std::size_t>(max_n) + 1);
  p[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    BigCount acc = 0;
    // generalized pentagonal numbers k(3k-1)/2 for k = 1, -1, 2, -2, ...
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const int g2 = k * (3 * k + 1) / 2;
      if (k % 2 == 1) {
        acc += p[static_cast<std::size_t>(n - g1)];
        if (g2 <= n) acc += p[static_cast<std::size_t>(n - g2)];
      } else {
        acc -= p[static_cast<std::size_t>(n - g1)];
        if (g2 <= n) acc -= p[static_cast<std::size_t>(n - g2)];
      }
    }
    p[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return p;
}

BigCount count_p(int n) { return partition_counts(n).back(); }

std::vector<BigCount> regular_partition_counts(int max_n, int a) {
  if (max_n < 0) throw std::invalid_argument("regular_partition_counts: negative n");
  if (a < 2) throw std::invalid_argument("regular_partition_counts: modulus must be >= 2");
  return eta_quotient_coefficients<BigCount>(static_cast<std::size_t>(max_n), static_cast<std::size_t>(a), 1);
}

BigCount count_p_regular(int n, int a) { return regular_partition_counts(n, a).back(); }

PartitionStream::PartitionStream(int n) {
  if (n < 0) throw std::invalid_argument("PartitionStream: negative n");
  if (n > 0) current_.push_back(n);
}

std::optional<Partition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Partition(current_);
  }
  // rightmost part greater than 1
  auto it = std::find_if(current_.rbegin(), current_.rend(), [](int p) { return p > 1; });
  if (it == current_.rend()) {
    done_ = true;
    return std::nullopt;
  }
  const std::size_t i = static_cast<std::size_t>(current_.rend() - it) - 1;
  const int v = current_[i] - 1;
  int rest = static_cast<int>(current_.size() - i - 1) + 1;  // trailing ones plus the unit taken
  current_.resize(i + 1);
  current_[i] = v;
  while (rest >= v) {
    current_.push_back(v);
    rest -= v;
  }
  if (rest > 0) current_.push_back(rest);
  return Partition(current_);
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  PartitionStream stream(n);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
  PartitionStream stream(n);
  while (auto p = stream.next()) fn(*p);
}

double hr_estimate(int n) {
  if (n < 1) throw std::invalid_argument("hr_estimate: n must be positive");
  const double nd = n;
  return std::exp(std::numbers::pi * std::sqrt(2.0 * nd / 3.0)) / (4.0 * nd * std::sqrt(3.0));
}

double hagis_estimate(int n, int a) {
  if (n < 1) throw std::invalid_argument("hagis_estimate: n must be positive");
  if (a < 2) throw std::invalid_argument("hagis_estimate: modulus must be >= 2");
  const double nd = n, ad = a;
  const double c = std::numbers::pi * std::sqrt(2.0 / 3.0);
  const double c_a = std::sqrt(12.0) * std::pow(ad, -0.75) * std::pow(ad - 1.0, 0.25);
  return c_a * std::pow(24.0 * nd - 1.0 + ad, -0.75) *
         std::exp(c * std::sqrt((ad - 1.0) / ad * (nd + (ad - 1.0) / 24.0)));
}

}  // namespace corz
