#include "corz/abacus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "corz/power_series.hpp"

namespace corz {

namespace {

// p(60) = 966467 < 10^6 < p(61); above this the abacus walk is used.
constexpr int kFilterMaxN = 60;

void require_ell(int ell, const char* who) {
  if (ell < 2) throw std::invalid_argument(std::string(who) + ": ell must be >= 2");
}

// Bead positions of a canonical abacus, descending.
std::vector<int> beads_of(const Abacus& ab) {
  std::vector<int> beads;
  for (int i = 0; i < ab.ell; ++i)
    for (int m = 1; m <= ab.cols[static_cast<std::size_t>(i)]; ++m) beads.push_back(ab.ell * (m - 1) + i);
  std::sort(beads.begin(), beads.end(), std::greater<>());
  return beads;
}

}  // namespace

bool is_prime(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

Abacus::Abacus(int ell_, std::vector<int> cols_) : ell(ell_), cols(std::move(cols_)) {
  require_ell(ell, "Abacus");
  if (cols.size() != static_cast<std::size_t>(ell))
    throw std::invalid_argument("Abacus: expected " + std::to_string(ell) + " columns");
  if (std::any_of(cols.begin(), cols.end(), [](int b) { return b < 0; }))
    throw std::invalid_argument("Abacus: negative column height");
}

long Abacus::beads() const { return std::accumulate(cols.begin(), cols.end(), 0L); }

StructureNumbers structure_numbers(const Partition& lam) {
  StructureNumbers out;
  const int s = static_cast<int>(lam.length());
  out.values.reserve(lam.length());
  for (int i = 1; i <= s; ++i) out.values.push_back(lam[static_cast<std::size_t>(i - 1)] - i + s);
  return out;
}

Abacus rotate(const Abacus& ab) {
  Abacus out = ab;
  out.cols[0] = ab.cols.back() + 1;
  std::copy(ab.cols.begin(), ab.cols.end() - 1, out.cols.begin() + 1);
  return out;
}

Abacus canonicalize(Abacus ab) {
  while (ab.cols[0] > 0) {
    const int first = ab.cols[0];
    std::rotate(ab.cols.begin(), ab.cols.begin() + 1, ab.cols.end());
    ab.cols.back() = first - 1;
  }
  return ab;
}

Abacus to_abacus(const Partition& lam, int ell) {
  require_ell(ell, "to_abacus");
  if (!is_core(lam, ell)) throw std::invalid_argument("not an ell-core: " + lam.to_string());
  std::vector<int> cols(static_cast<std::size_t>(ell), 0);
  for (int b : structure_numbers(lam).values) ++cols[static_cast<std::size_t>(b % ell)];
  // Beads of a core are flush, so the counts determine the abacus.
  return canonicalize(Abacus(ell, std::move(cols)));
}

Partition from_abacus(const Abacus& ab) {
  if (!ab.canonical()) throw std::invalid_argument("from_abacus: abacus is not canonical (b_0 != 0)");
  const std::vector<int> beads = beads_of(ab);
  const int s = static_cast<int>(beads.size());
  std::vector<int> parts;
  parts.reserve(beads.size());
  for (int i = 1; i <= s; ++i) parts.push_back(beads[static_cast<std::size_t>(i - 1)] + i - s);
  return Partition(std::move(parts));
}

std::int64_t abacus_size(const Abacus& ab) {
  if (!ab.canonical()) throw std::invalid_argument("abacus_size: abacus is not canonical (b_0 != 0)");
  std::int64_t total = 0, s = 0;
  for (int i = 0; i < ab.ell; ++i) {
    const std::int64_t b = ab.cols[static_cast<std::size_t>(i)];
    total += ab.ell * b * (b - 1) / 2 + i * b;
    s += b;
  }
  return total - s * (s - 1) / 2;
}

std::vector<Partition> enumerate_cores_by_filter(int n, int ell) {
  require_ell(ell, "enumerate_cores");
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) {
    if (is_core(p, ell)) out.push_back(p);
  });
  return out;
}

std::vector<Partition> enumerate_cores_by_abacus(int n, int ell) {
  require_ell(ell, "enumerate_cores");
  if (n < 0) throw std::invalid_argument("enumerate_cores: negative n");
  std::vector<Partition> out;
  // Every bead sits at a first-column hook length, hence at position <= n, and
  // there are at most n beads.
  std::vector<int> limit(static_cast<std::size_t>(ell), 0);
  for (int i = 1; i < ell; ++i) limit[static_cast<std::size_t>(i)] = i <= n ? (n - i) / ell + 1 : 0;

  Abacus ab(ell, std::vector<int>(static_cast<std::size_t>(ell), 0));
  auto walk = [&](auto&& self, int col, long beads) -> void {
    if (col == ell) {
      if (abacus_size(ab) == n) out.push_back(from_abacus(ab));
      return;
    }
    for (int b = 0; b <= limit[static_cast<std::size_t>(col)] && beads + b <= std::max(n, 0); ++b) {
      ab.cols[static_cast<std::size_t>(col)] = b;
      self(self, col + 1, beads + b);
    }
    ab.cols[static_cast<std::size_t>(col)] = 0;
  };
  walk(walk, 1, 0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Partition> enumerate_cores(int n, int ell) {
  return n > kFilterMaxN ? enumerate_cores_by_abacus(n, ell) : enumerate_cores_by_filter(n, ell);
}

std::vector<BigCount> core_counts(int max_n, int ell) {
  require_ell(ell, "core_counts");
  if (max_n < 0) throw std::invalid_argument("core_counts: negative n");
  return eta_quotient_coefficients<BigCount>(static_cast<std::size_t>(max_n), static_cast<std::size_t>(ell),
                                             static_cast<std::size_t>(ell));
}

BigCount count_cores(int n, int ell) { return core_counts(n, ell).back(); }

std::optional<BeadJumpWitness> bead_jump_witness(const Abacus& ab) {
  if (!ab.canonical()) throw std::invalid_argument("bead_jump_witness: abacus is not canonical");
  if (!is_prime(ab.ell)) throw std::invalid_argument("bead_jump_witness: ell must be prime");
  const int ell = ab.ell;
  const int top = *std::max_element(ab.cols.begin(), ab.cols.end());
  for (int k = 0; k <= top; ++k) {
    bool gap = true;
    int column = -1;
    for (int i = 1; i < ell; ++i) {
      const int b = ab.cols[static_cast<std::size_t>(i)];
      if (b >= k + ell) {
        if (column < 0) column = i;
      } else if (b > k) {
        gap = false;
        break;
      }
    }
    if (!gap || column < 0) continue;

    std::vector<int> beads = beads_of(ab);
    std::reverse(beads.begin(), beads.end());  // ascending
    for (int row = k + 1; row <= k + ell; ++row) {
      const int pos = ell * (row - 1) + column;
      const auto below = std::lower_bound(beads.begin(), beads.end(), pos) - beads.begin();
      const int part = pos - static_cast<int>(below);
      if (part % ell == 0) return BeadJumpWitness{k, column, part};
    }
    throw std::logic_error("bead_jump_witness: no part divisible by ell in the long column");
  }
  return std::nullopt;
}

Abacus swap_columns(const Abacus& ab, int i, int j) {
  if (!ab.canonical()) throw std::invalid_argument("swap_columns: abacus is not canonical");
  if (!(1 <= i && i < j && j <= ab.ell - 1))
    throw std::invalid_argument("swap_columns: need 1 <= i < j <= ell-1");
  if (!(ab.cols[static_cast<std::size_t>(j)] < ab.cols[static_cast<std::size_t>(i)]))
    throw std::invalid_argument("swap_columns: need b_j < b_i");
  Abacus out = ab;
  std::swap(out.cols[static_cast<std::size_t>(i)], out.cols[static_cast<std::size_t>(j)]);
  return out;
}

std::int64_t n_ell(int ell) {
  require_ell(ell, "n_ell");
  const std::int64_t l = ell;
  const std::int64_t l2 = l * l, l4 = l2 * l2;
  return (l4 * l2 - 2 * l4 * l + 2 * l4 - 3 * l2 + 2 * l) / 24;
}

Abacus extremal_abacus(int ell) {
  require_ell(ell, "extremal_abacus");
  std::vector<int> cols(static_cast<std::size_t>(ell));
  for (int i = 0; i < ell; ++i) cols[static_cast<std::size_t>(i)] = i * (ell - 1);
  return Abacus(ell, std::move(cols));
}

std::optional<int> search_max_regular_core(int ell, int bound) {
  require_ell(ell, "search_max_regular_core");
  if (bound < 1) throw std::invalid_argument("search_max_regular_core: bound must be >= 1");
  for (int n = bound; n >= 1; --n) {
    const auto cores = enumerate_cores(n, ell);
    if (std::any_of(cores.begin(), cores.end(), [ell](const Partition& p) { return is_regular(p, ell); }))
      return n;
  }
  return std::nullopt;
}

}  // namespace corz
