#include "corz/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "corz/abacus.hpp"
#include "corz/census.hpp"
#include "corz/characters.hpp"
#include "corz/numtheory.hpp"

namespace corz {

namespace {

using Checks = std::vector<VerifyCheck>;

void check(Checks& out, std::string name, bool ok, std::string detail = {}) {
  out.push_back(VerifyCheck{std::move(name), ok, std::move(detail)});
}

std::string str(const BigCount& v) { return to_decimal(v); }

Checks suite_constants(const VerifyOptions&) {
  Checks out;
  const std::map<int, long> listed{{5, 1}, {7, 8}, {11, 1275}, {13, 33463}};
  for (const auto& [ell, want] : listed) {
    const BigCount got = inv_alpha(ell);
    check(out, "inv_alpha(" + std::to_string(ell) + ") = " + std::to_string(want), got == want, "got " + str(got));
  }
  for (int ell : {5, 7, 11, 13, 17, 19}) {
    const Rational exact = inv_alpha_exact(ell);
    const DirichletEstimate num = inv_alpha_numeric(ell);
    const Float50 diff = abs(num.value - Float50(exact.get_str()));
    check(out, "inv_alpha(" + std::to_string(ell) + ") exact vs Dirichlet series", diff <= Float50(1e-6),
          "exact " + exact.get_str() + ", |diff| " + diff.str(3) + ", terms " + std::to_string(num.terms));
  }
  for (const auto& [ell, want] : std::map<int, long>{{5, 1}, {7, 2}, {13, 7}})
    check(out, "delta_ell(" + std::to_string(ell) + ") = " + std::to_string(want), delta_ell(ell) == want);
  for (const auto& [ell, want] : std::map<int, long>{{3, 16}, {5, 440}})
    check(out, "n_ell(" + std::to_string(ell) + ") = " + std::to_string(want), n_ell(ell) == want);
  for (int ell : {2, 3, 5, 7})
    check(out, "n_ell(" + std::to_string(ell) + ") = |extremal core|", n_ell(ell) == abacus_size(extremal_abacus(ell)));
  return out;
}

Checks suite_theorem2(const VerifyOptions& opts) {
  Checks out;
  const auto counts = core_counts(60, 3);
  for (int n = 17; n <= 60; ++n) {
    const auto cores = enumerate_cores(n, 3);
    std::size_t nonzero = 0;
    for (const auto& mu : cores) {
      MnEvaluator eval(mu);
      for (const auto& lam : cores)
        if (eval(lam) != 0) ++nonzero;
    }
    const BigCount c = counts[static_cast<std::size_t>(n)];
    const BigCount zs = z_star_exact(n, 3, {.cap = 60, .jobs = opts.jobs});
    check(out, "n = " + std::to_string(n) + ": all 3-core pairs vanish, Z* = c_3(n)^2",
          nonzero == 0 && zs == c * c && zs == z_star_closed(n, 3),
          "c_3 = " + str(c) + ", nonzero = " + std::to_string(nonzero) + ", Z* = " + str(zs));
  }
  const auto max_regular = search_max_regular_core(3, 200);
  check(out, "largest n <= 200 with a 3-regular 3-core is 10", max_regular == 10,
        max_regular ? "got " + std::to_string(*max_regular) : "none");
  return out;
}

Checks suite_lemma1(const VerifyOptions& opts) {
  Checks out;
  for (int ell : {2, 3, 5, 7})
    for (int n = 1; n <= 14; ++n) {
      const BigCount exact = z_exact(n, ell, {.cap = 14, .jobs = opts.jobs});
      const BigCount lower = z_lower_bound(n, ell);
      check(out, "Z_" + std::to_string(ell) + "(" + std::to_string(n) + ") >= lower bound", exact >= lower,
            str(exact) + " >= " + str(lower));
    }
  for (int ell : {2, 3, 5})
    for (int n = 1; n <= 12; ++n) {
      std::size_t pairs = 0, bad = 0;
      const auto cores = enumerate_cores(n, ell);
      for (const auto& mu : enumerate_partitions(n)) {
        if (is_regular(mu, ell)) continue;
        MnEvaluator eval(mu);
        for (const auto& lam : cores) {
          ++pairs;
          if (eval(lam) != 0) ++bad;
        }
      }
      check(out, "ell = " + std::to_string(ell) + ", n = " + std::to_string(n) + ": core vs non-regular vanish",
            bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " nonzero");
    }
  return out;
}

Checks suite_closed_forms(const VerifyOptions&) {
  Checks out;
  const auto c2 = core_counts(500, 2), c3 = core_counts(500, 3), c5 = core_counts(300, 5);
  for (int n = 0; n <= 500; ++n) {
    const auto i = static_cast<std::size_t>(n);
    check(out, "c_2(" + std::to_string(n) + ") closed form", c2[i] == c2_closed(n), str(c2[i]));
    check(out, "c_3(" + std::to_string(n) + ") closed form", c3[i] == c3_closed(n), str(c3[i]));
  }
  for (int n = 0; n <= 300; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const BigCount sigma = sigma_twisted(n + 1, 5);
    check(out, "c_5(" + std::to_string(n) + ") = sigma_5(n+1)", c5[i] == sigma, str(c5[i]) + " vs " + str(sigma));
  }
  for (int t = 4; t <= 9; ++t) {
    const auto ct = core_counts(500, t);
    const auto first_zero = std::find(ct.begin(), ct.end(), 0);
    check(out, "c_" + std::to_string(t) + "(n) > 0 for n <= 500", first_zero == ct.end(),
          first_zero == ct.end() ? "" : "zero at n = " + std::to_string(first_zero - ct.begin()));
  }
  const auto c11 = core_counts(1000, 11);
  for (int n = 100; n <= 1000; ++n)
    check(out, "c_11(" + std::to_string(n) + ") > (2 alpha_11 / 5) n^4",
          core_lower_bound_ok(n, 11, c11[static_cast<std::size_t>(n)]));
  return out;
}

Checks suite_orthogonality(const VerifyOptions&) {
  Checks out;
  for (int n = 1; n <= 10; ++n) {
    const auto parts = enumerate_partitions(n);
    for (const auto& mu : parts) {
      MnEvaluator eval(mu);
      BigCount sum = 0;
      for (const auto& lam : parts) {
        const CharValue v = eval(lam);
        sum += v * v;
      }
      const BigCount z = centralizer_order(mu);
      check(out, "sum_lam chi_lam" + mu.to_string() + "^2 = z_mu", sum == z, str(sum) + " vs " + str(z));
    }
  }
  for (int n = 1; n <= 12; ++n) {
    MnEvaluator eval(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    std::size_t bad = 0, total = 0;
    for_each_partition(n, [&](const Partition& lam) {
      ++total;
      if (eval(lam) != dimension(lam)) ++bad;
    });
    check(out, "n = " + std::to_string(n) + ": identity column = hook length dimensions", bad == 0,
          std::to_string(total) + " rows, " + std::to_string(bad) + " mismatches");
  }
  for (int n = 1; n <= 10; ++n) {
    const Partition trivial{n};
    const Partition sign(std::vector<int>(static_cast<std::size_t>(n), 1));
    std::size_t bad = 0;
    for_each_partition(n, [&](const Partition& mu) {
      const int expected_sign = (n - static_cast<int>(mu.length())) % 2 == 0 ? 1 : -1;
      if (mn_character(trivial, mu) != 1) ++bad;
      if (mn_character(sign, mu) != expected_sign) ++bad;
    });
    check(out, "n = " + std::to_string(n) + ": trivial and sign characters", bad == 0);
  }
  return out;
}

Abacus random_abacus(std::mt19937_64& rng, int ell, int max_height) {
  std::uniform_int_distribution<int> h(0, max_height);
  std::vector<int> cols(static_cast<std::size_t>(ell), 0);
  for (int i = 1; i < ell; ++i) cols[static_cast<std::size_t>(i)] = h(rng);
  return Abacus(ell, std::move(cols));
}

Checks suite_abacus(const VerifyOptions&) {
  Checks out;
  for (int ell : {2, 3, 5, 7}) {
    std::size_t cores = 0, bad = 0;
    for (int n = 0; n <= 40; ++n)
      for (const auto& lam : enumerate_cores(n, ell)) {
        ++cores;
        if (from_abacus(to_abacus(lam, ell)) != lam) ++bad;
      }
    check(out, "ell = " + std::to_string(ell) + ": abacus roundtrip, n <= 40", bad == 0,
          std::to_string(cores) + " cores, " + std::to_string(bad) + " failures");
    const auto gf = core_counts(60, ell);
    for (int n = 0; n <= 60; ++n) {
      const auto by_abacus = enumerate_cores_by_abacus(n, ell).size();
      check(out, "#cores(" + std::to_string(n) + ", " + std::to_string(ell) + ") = gf coefficient",
            gf[static_cast<std::size_t>(n)] == static_cast<unsigned long>(by_abacus),
            std::to_string(by_abacus) + " vs " + str(gf[static_cast<std::size_t>(n)]));
    }
  }

  std::mt19937_64 rng(20221);
  const int ells[] = {3, 5, 7, 11};
  for (int trial = 0; trial < 500;) {
    const int ell = ells[rng() % 4];
    const Abacus ab = random_abacus(rng, ell, 12);
    std::vector<std::pair<int, int>> inversions;
    for (int i = 1; i < ell; ++i)
      for (int j = i + 1; j < ell; ++j)
        if (ab.cols[static_cast<std::size_t>(j)] < ab.cols[static_cast<std::size_t>(i)]) inversions.emplace_back(i, j);
    if (inversions.empty()) continue;
    const auto [i, j] = inversions[rng() % inversions.size()];
    const Abacus swapped = swap_columns(ab, i, j);
    check(out,
          "swap #" + std::to_string(trial) + " ell = " + std::to_string(ell) + " cols (" + std::to_string(i) + "," +
              std::to_string(j) + ")",
          abacus_size(swapped) > abacus_size(ab) && swapped.beads() == ab.beads(),
          std::to_string(abacus_size(ab)) + " -> " + std::to_string(abacus_size(swapped)));
    ++trial;
  }
  for (int trial = 0; trial < 500;) {
    const int ell = ells[rng() % 4];
    const Abacus ab = random_abacus(rng, ell, 3 * ell);
    const auto witness = bead_jump_witness(ab);
    if (!witness) continue;
    const Partition lam = from_abacus(ab);
    const bool named = std::find(lam.parts().begin(), lam.parts().end(), witness->part) != lam.parts().end();
    check(out, "bead jump #" + std::to_string(trial) + " ell = " + std::to_string(ell),
          named && witness->part % ell == 0 && !is_regular(lam, ell),
          "k = " + std::to_string(witness->k) + ", part " + std::to_string(witness->part));
    ++trial;
  }
  return out;
}

const std::map<std::string, std::function<Checks(const VerifyOptions&)>>& registry() {
  static const std::map<std::string, std::function<Checks(const VerifyOptions&)>> suites{
      {"theorem2", suite_theorem2}, {"lemma1", suite_lemma1},     {"closed-forms", suite_closed_forms},
      {"orthogonality", suite_orthogonality}, {"abacus", suite_abacus}, {"constants", suite_constants}};
  return suites;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["passed"] = passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return j.dump(1);
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"theorem2", "lemma1", "closed-forms",
                                              "orthogonality", "abacus", "constants"};
  return names;
}

VerifyReport verify(const std::string& suite, const VerifyOptions& opts) {
  const auto& suites = registry();
  const auto it = suites.find(suite);
  if (it == suites.end()) {
    std::string names;
    for (const auto& s : verify_suites()) names += (names.empty() ? "" : ", ") + s;
    throw std::invalid_argument("unknown verify suite '" + suite + "'; available: " + names);
  }
  return VerifyReport{suite, it->second(opts)};
}

}  // namespace corz
