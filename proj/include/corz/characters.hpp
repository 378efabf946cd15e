#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "corz/bigint.hpp"
#include "corz/partition.hpp"

namespace corz {

/// chi_lam(mu): lam indexes the irreducible character, mu the conjugacy class.
struct CharQuery {
  Partition lam;
  Partition mu;
};

/// A rim hook of lam; removing it leaves `remainder`.
struct BorderStrip {
  int length = 0;
  int height = 0;  // rows spanned minus one
  Partition remainder;
};

/// All border strips of the given length, found by sliding beads of the
/// beta-set down by `length` into empty positions.
std::vector<BorderStrip> border_strips(const Partition& lam, int length);

/// Murnaghan-Nakayama evaluation for one fixed class mu, memoized on
/// (partition, parts of mu consumed). Parts of mu are removed largest first.
/// Not thread-safe; use one evaluator per worker.
class MnEvaluator {
 public:
  explicit MnEvaluator(Partition mu);

  const Partition& mu() const { return mu_; }
  /// Throws std::invalid_argument when |lam| != |mu|.
  CharValue operator()(const Partition& lam);
  std::size_t cache_size() const { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<int>& key) const noexcept;
  };

  const CharValue& eval(const Partition& lam, std::size_t consumed);

  Partition mu_;
  std::unordered_map<std::vector<int>, CharValue, KeyHash> memo_;
};

CharValue mn_character(const CharQuery& q);
CharValue mn_character(const Partition& lam, const Partition& mu);
/// Unmemoized evaluation removing strips in exactly the given order.
CharValue mn_character_sequence(const Partition& lam, std::span<const int> strip_lengths);

/// True when some part of mu is not a hook length of lam; then chi_lam(mu) = 0.
bool quick_vanish(const CharQuery& q);
bool quick_vanish(const HookMultiset& lam_hooks, const Partition& mu);

/// n! / prod(hook lengths).
BigCount dimension(const Partition& lam);
/// z_mu = prod_i i^{m_i} m_i!
BigCount centralizer_order(const Partition& mu);

}  // namespace corz
