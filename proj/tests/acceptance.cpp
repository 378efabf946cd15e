// Acceptance suite: one pass/fail line per criterion, with the criterion's
// runtime budget enforced. Exit status is the number of failed criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "corz/abacus.hpp"
#include "corz/census.hpp"
#include "corz/characters.hpp"
#include "corz/numtheory.hpp"
#include "corz/partition.hpp"

namespace {

using corz::Abacus;
using corz::BigCount;
using corz::Partition;

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

std::string s(long v) { return std::to_string(v); }

void constants(Outcome& out) {
  const std::array<std::pair<int, long>, 4> listed{{{5, 1}, {7, 8}, {11, 1275}, {13, 33463}}};
  for (const auto& [ell, want] : listed) {
    out.require(corz::inv_alpha(ell) == want, "1/alpha_" + s(ell) + " != " + s(want));
    const auto numeric = corz::inv_alpha_numeric(ell);
    out.require(abs(numeric.value - corz::Float50(want)) <= corz::Float50(1e-6),
                "numeric route disagrees at ell = " + s(ell));
  }
}

void c5_identity(Outcome& out) {
  const auto c5 = corz::core_counts(300, 5);
  for (long n = 0; n <= 300; ++n)
    out.require(c5[static_cast<std::size_t>(n)] == corz::sigma_twisted(n + 1, 5), "c_5(" + s(n) + ") != sigma_5(n+1)");
}

void c2_c3_closed(Outcome& out) {
  const auto c2 = corz::core_counts(500, 2), c3 = corz::core_counts(500, 3);
  for (long n = 0; n <= 500; ++n) {
    out.require(c2[static_cast<std::size_t>(n)] == corz::c2_closed(n), "c_2(" + s(n) + ")");
    out.require(c3[static_cast<std::size_t>(n)] == corz::c3_closed(n), "c_3(" + s(n) + ")");
  }
}

void regular_cores(Outcome& out) {
  out.require(corz::n_ell(3) == 16, "N_3 != 16");
  out.require(corz::search_max_regular_core(3, 200) == 10, "N_3^max != 10");
  for (int n = 11; n <= 200; ++n)
    for (const auto& lam : corz::enumerate_cores(n, 3))
      out.require(!corz::is_regular(lam, 3), "3-regular 3-core " + lam.to_string() + " of " + s(n));
}

void theorem2(Outcome& out) {
  const auto c3 = corz::core_counts(60, 3);
  for (int n = 17; n <= 60; ++n) {
    const auto cores = corz::enumerate_cores(n, 3);
    out.require(c3[static_cast<std::size_t>(n)] == static_cast<unsigned long>(cores.size()), "c_3 count at " + s(n));
    for (const auto& mu : cores) {
      corz::MnEvaluator eval(mu);
      for (const auto& lam : cores)
        out.require(eval(lam) == 0, "chi_" + lam.to_string() + mu.to_string() + " != 0");
    }
    const BigCount c = c3[static_cast<std::size_t>(n)];
    out.require(corz::z_star_exact(n, 3) == c * c, "Z*_3(" + s(n) + ") != c_3(n)^2");
  }
}

void lemma1(Outcome& out) {
  for (int ell : {2, 3, 5, 7}) {
    for (int n = 1; n <= 14; ++n)
      out.require(corz::z_exact(n, ell) >= corz::z_lower_bound(n, ell), "Z_" + s(ell) + "(" + s(n) + ") < bound");
    for (int n = 1; n <= 12; ++n) {
      const auto cores = corz::enumerate_cores(n, ell);
      corz::for_each_partition(n, [&](const Partition& mu) {
        if (corz::is_regular(mu, ell)) return;
        corz::MnEvaluator eval(mu);
        for (const auto& lam : cores) out.require(eval(lam) == 0, "chi_" + lam.to_string() + mu.to_string());
      });
    }
  }
}

void character_oracles(Outcome& out) {
  for (int n = 1; n <= 12; ++n) {
    const auto all = corz::enumerate_partitions(n);
    if (n <= 10)
      for (const auto& mu : all) {
        corz::MnEvaluator eval(mu);
        BigCount sum = 0;
        for (const auto& lam : all) {
          const auto v = eval(lam);
          sum += v * v;
        }
        out.require(sum == corz::centralizer_order(mu), "orthogonality at " + mu.to_string());
      }
    corz::MnEvaluator identity(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    for (const auto& lam : all) out.require(identity(lam) == corz::dimension(lam), "dimension " + lam.to_string());
    if (n <= 10) {
      const Partition sign(std::vector<int>(static_cast<std::size_t>(n), 1));
      for (const auto& mu : all) {
        out.require(corz::mn_character(Partition{n}, mu) == 1, "trivial at " + mu.to_string());
        const int expected = (n - static_cast<int>(mu.length())) % 2 == 0 ? 1 : -1;
        out.require(corz::mn_character(sign, mu) == expected, "sign at " + mu.to_string());
      }
    }
  }
}

void abacus_suite(Outcome& out) {
  for (int ell : {2, 3, 5, 7}) {
    for (int n = 0; n <= 40; ++n)
      for (const auto& lam : corz::enumerate_cores(n, ell))
        out.require(corz::from_abacus(corz::to_abacus(lam, ell)) == lam, "roundtrip " + lam.to_string());
    const auto gf = corz::core_counts(60, ell);
    for (int n = 0; n <= 60; ++n) {
      const auto expected = gf[static_cast<std::size_t>(n)];
      out.require(expected == static_cast<unsigned long>(corz::enumerate_cores(n, ell).size()) &&
                      expected == static_cast<unsigned long>(corz::enumerate_cores_by_abacus(n, ell).size()),
                  "core count ell = " + s(ell) + ", n = " + s(n));
    }
  }

  std::mt19937_64 rng(6);
  const std::array<int, 4> ells{3, 5, 7, 11};
  auto random_abacus = [&](int ell, int max_height) {
    std::vector<int> cols(static_cast<std::size_t>(ell), 0);
    for (int i = 1; i < ell; ++i) cols[static_cast<std::size_t>(i)] = static_cast<int>(rng() % (max_height + 1));
    return Abacus(ell, cols);
  };
  for (int trial = 0; trial < 500;) {
    const int ell = ells[rng() % ells.size()];
    const Abacus ab = random_abacus(ell, 12);
    int i = 0, j = 0;
    for (int a = 1; a < ell && !i; ++a)
      for (int b = a + 1; b < ell; ++b)
        if (ab.cols[static_cast<std::size_t>(b)] < ab.cols[static_cast<std::size_t>(a)]) {
          i = a;
          j = b;
          break;
        }
    if (!i) continue;
    ++trial;
    const Abacus swapped = corz::swap_columns(ab, i, j);
    out.require(corz::abacus_size(swapped) > corz::abacus_size(ab), "swap did not grow size");
  }
  for (int trial = 0; trial < 500;) {
    const int ell = ells[rng() % ells.size()];
    const Abacus ab = random_abacus(ell, 3 * ell);
    const auto witness = corz::bead_jump_witness(ab);
    if (!witness) continue;
    ++trial;
    const Partition lam = corz::from_abacus(ab);
    const bool present = std::find(lam.parts().begin(), lam.parts().end(), witness->part) != lam.parts().end();
    out.require(present && witness->part % ell == 0, "bead jump witness part " + s(witness->part));
  }
}

void asymptotic_trends(Outcome& out) {
  const auto p = corz::partition_counts(500);
  const auto p5 = corz::regular_partition_counts(500, 5);
  const auto c5 = corz::core_counts(500, 5);
  auto hr_err = [&](int n) { return std::abs(corz::hr_estimate(n) / p[static_cast<std::size_t>(n)].get_d() - 1.0); };
  auto hagis_err = [&](int n) {
    return std::abs(corz::hagis_estimate(n, 5) / p5[static_cast<std::size_t>(n)].get_d() - 1.0);
  };
  out.require(hr_err(400) < hr_err(50), "Hardy-Ramanujan ratio not closer to 1 at n = 400");
  out.require(hagis_err(400) < hagis_err(50), "Hagis ratio not closer to 1 at n = 400");
  for (int n = 100; n <= 500; ++n) {
    const auto i = static_cast<std::size_t>(n);
    corz::Rational ratio((p[i] - p5[i]) * c5[i]);
    ratio /= corz::core_main_term(n, 5) * corz::Rational(p[i]);
    out.require(ratio >= corz::Rational(1, 2) && ratio <= 2, "main-term ratio out of [0.5, 2] at n = " + s(n));
  }
}

void positivity_and_lower_bound(Outcome& out) {
  for (int t = 4; t <= 9; ++t) {
    const auto c = corz::core_counts(500, t);
    for (std::size_t n = 0; n < c.size(); ++n) out.require(c[n] > 0, "c_" + s(t) + "(" + s(static_cast<long>(n)) + ") = 0");
  }
  const auto c11 = corz::core_counts(1000, 11);
  for (long n = 100; n <= 1000; ++n)
    out.require(corz::core_lower_bound_ok(n, 11, c11[static_cast<std::size_t>(n)]), "c_11 lower bound at " + s(n));
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC-1", "1/alpha_ell = 1, 8, 1275, 33463; exact and numeric routes agree", 10, constants},
      {"AC-2", "c_5(n) = sigma_5(n+1), 0 <= n <= 300", 10, c5_identity},
      {"AC-3", "c_2, c_3 closed forms match core counts, n <= 500", 10, c2_c3_closed},
      {"AC-4", "N_3 = 16, N_3^max = 10, no 3-regular 3-core for 10 < n <= 200", 60, regular_cores},
      {"AC-5", "ell = 3, 16 < n <= 60: all 3-core pairs vanish, Z*_3 = c_3^2", 300, theorem2},
      {"AC-6", "Z_ell(n) >= lower bound (n <= 14); core vs non-regular vanish (n <= 12)", 300, lemma1},
      {"AC-7", "orthogonality n <= 10, dimensions n <= 12, trivial/sign n <= 10", 300, character_oracles},
      {"AC-8", "abacus roundtrip, enumeration counts, swaps, bead jumps", 120, abacus_suite},
      {"AC-9", "asymptotic trend checks (HR, Hagis, main-term band)", 60, asymptotic_trends},
      {"AC-10", "c_t(n) > 0 for 4 <= t <= 9; c_11 lower bound on [100, 1000]", 30, positivity_and_lower_bound},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(secs < c.budget_seconds, "over runtime budget of " + std::to_string(c.budget_seconds) + " s");
    if (!out.ok) ++failed;
    std::printf("[%s] %-6s %s (%.2f s / %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                c.budget_seconds, out.ok ? "" : " -- ", out.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
