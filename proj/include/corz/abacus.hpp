#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "corz/bigint.hpp"
#include "corz/partition.hpp"

namespace corz {

/// Flush ell-abacus of an ell-core: cols[i] beads sit at the top of rod i.
/// Canonical form has cols[0] == 0 (no zero parts in the encoded partition).
struct Abacus {
  int ell = 2;
  std::vector<int> cols;

  Abacus() = default;
  /// Throws unless ell >= 2, cols.size() == ell and all heights are nonnegative.
  Abacus(int ell, std::vector<int> cols);

  bool canonical() const { return cols.empty() || cols[0] == 0; }
  long beads() const;
  friend bool operator==(const Abacus&, const Abacus&) = default;
};

/// First-column hook lengths B_1 > ... > B_s, i.e. B_i = lam_i - i + s.
struct StructureNumbers {
  std::vector<int> values;
};

StructureNumbers structure_numbers(const Partition& lam);

/// (b_0, ..., b_{l-1}) -> (b_{l-1} + 1, b_0, ..., b_{l-2}); same core, one extra zero part.
Abacus rotate(const Abacus& ab);
/// Applies the inverse rotation until column 0 is empty.
Abacus canonicalize(Abacus ab);

/// Throws std::invalid_argument("not an ell-core") unless is_core(lam, ell).
Abacus to_abacus(const Partition& lam, int ell);
/// Throws std::invalid_argument for a non-canonical abacus.
Partition from_abacus(const Abacus& ab);

/// |lam| for the canonical abacus, in closed form per column.
std::int64_t abacus_size(const Abacus& ab);

/// Every ell-core of n exactly once (order unspecified but deterministic).
std::vector<Partition> enumerate_cores(int n, int ell);
/// Walks canonical abaci with heights bounded by the largest possible bead.
std::vector<Partition> enumerate_cores_by_abacus(int n, int ell);
/// Filters the partitions of n by is_core.
std::vector<Partition> enumerate_cores_by_filter(int n, int ell);

/// Exact c_ell(0..max_n) from prod (1 - q^{ell k})^ell / (1 - q^k).
std::vector<BigCount> core_counts(int max_n, int ell);
BigCount count_cores(int n, int ell);

struct BeadJumpWitness {
  int k = 0;       // gap threshold: every column <= k or >= k + ell
  int column = 0;  // a column with at least k + ell beads
  int part = 0;    // a part of from_abacus(ab) divisible by ell
  friend bool operator==(const BeadJumpWitness&, const BeadJumpWitness&) = default;
};

/// Smallest k satisfying the gap condition, with the first long column and the
/// part divisible by ell found among that column's beads in rows k+1..k+ell.
std::optional<BeadJumpWitness> bead_jump_witness(const Abacus& ab);

/// Requires 1 <= i < j <= ell-1 and cols[j] < cols[i]; result has strictly larger size.
Abacus swap_columns(const Abacus& ab, int i, int j);

/// (l^6 - 2l^5 + 2l^4 - 3l^2 + 2l) / 24
std::int64_t n_ell(int ell);
/// (0, l-1, 2(l-1), ..., (l-1)^2)
Abacus extremal_abacus(int ell);

/// Largest n <= bound with an ell-core of n that is also ell-regular.
std::optional<int> search_max_regular_core(int ell, int bound);

bool is_prime(long v);

}  // namespace corz
