#pragma once

// Test-only reference implementations. They share no code paths with the
// library beyond the Partition value type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "corz/partition.hpp"

namespace oracle {

using corz::Partition;

inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

/// All partitions of n by plain recursion on the largest part.
inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

/// Hook lengths by scanning a cell grid: arm = cells to the right, leg = cells below.
inline std::multiset<int> hooks(const Partition& lam) {
  std::multiset<int> out;
  const int rows = static_cast<int>(lam.length());
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < lam[static_cast<std::size_t>(r)]; ++c) {
      const int arm = lam[static_cast<std::size_t>(r)] - c - 1;
      int leg = 0;
      for (int below = r + 1; below < rows && lam[static_cast<std::size_t>(below)] > c; ++below) ++leg;
      out.insert(arm + leg + 1);
    }
  return out;
}

inline bool is_core(const Partition& lam, int ell) {
  for (int h : hooks(lam))
    if (h % ell == 0) return false;
  return true;
}

/// Number of ways to distribute the parts of mu over variables so that
/// variable i receives total alpha[i]: the coefficient of x^alpha in p_mu.
inline long power_sum_coefficient(const std::vector<int>& mu, std::size_t j, std::vector<int>& alpha) {
  if (j == mu.size()) return std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 0; }) ? 1 : 0;
  long total = 0;
  for (auto& a : alpha) {
    if (a < mu[j]) continue;
    a -= mu[j];
    total += power_sum_coefficient(mu, j + 1, alpha);
    a += mu[j];
  }
  return total;
}

/// Frobenius formula: chi_lam(mu) = [x^{lam + delta}] a_delta * p_mu.
inline long frobenius_character(const Partition& lam, const Partition& mu) {
  const int vars = std::max<int>(1, static_cast<int>(lam.length()));
  std::vector<int> target(static_cast<std::size_t>(vars), 0);
  for (int i = 0; i < vars; ++i)
    target[static_cast<std::size_t>(i)] =
        (i < static_cast<int>(lam.length()) ? lam[static_cast<std::size_t>(i)] : 0) + (vars - 1 - i);
  std::vector<int> perm(static_cast<std::size_t>(vars));
  std::iota(perm.begin(), perm.end(), 0);
  const std::vector<int> mu_parts(mu.parts().begin(), mu.parts().end());
  long chi = 0;
  do {
    int inversions = 0;
    for (int a = 0; a < vars; ++a)
      for (int b = a + 1; b < vars; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    std::vector<int> alpha(static_cast<std::size_t>(vars));
    bool ok = true;
    for (int i = 0; i < vars; ++i) {
      alpha[static_cast<std::size_t>(i)] =
          target[static_cast<std::size_t>(i)] - (vars - 1 - perm[static_cast<std::size_t>(i)]);
      if (alpha[static_cast<std::size_t>(i)] < 0) ok = false;
    }
    if (!ok) continue;
    const long coeff = power_sum_coefficient(mu_parts, 0, alpha);
    chi += (inversions % 2 == 0) ? coeff : -coeff;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return chi;
}

/// Legendre symbol from the set of nonzero squares mod ell.
inline int legendre(long a, int ell) {
  long r = ((a % ell) + ell) % ell;
  if (r == 0) return 0;
  for (long x = 1; x < ell; ++x)
    if (x * x % ell == r) return 1;
  return -1;
}

/// Twisted divisor sum by trial division over every d <= n (fits in int64 for small inputs).
inline std::int64_t sigma(long n, int ell) {
  std::int64_t total = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::int64_t power = 1;
    for (int e = 0; e < (ell - 3) / 2; ++e) power *= d;
    total += legendre(n / d, ell) * power;
  }
  return total;
}

}  // namespace oracle
