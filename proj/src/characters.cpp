#include "corz/characters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace corz {

namespace {

void require_same_size(const Partition& lam, int n) {
  if (lam.size() != n)
    throw std::invalid_argument("character query size mismatch: |lam| = " + std::to_string(lam.size()) +
                                ", |mu| = " + std::to_string(n));
}

// Beta-set (descending) back to a partition, dropping zero parts.
Partition from_beta(const std::vector<int>& beta_desc) {
  const int s = static_cast<int>(beta_desc.size());
  std::vector<int> parts;
  parts.reserve(beta_desc.size());
  for (int i = 0; i < s; ++i) {
    const int part = beta_desc[static_cast<std::size_t>(i)] - (s - 1 - i);
    if (part == 0) break;
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

}  // namespace

std::vector<BorderStrip> border_strips(const Partition& lam, int length) {
  if (length < 1) throw std::invalid_argument("border_strips: length must be positive");
  std::vector<BorderStrip> out;
  if (lam.empty()) return out;
  const int s = static_cast<int>(lam.length());
  std::vector<int> beta(lam.length());
  for (int i = 0; i < s; ++i) beta[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(i)] - i - 1 + s;
  std::vector<char> occupied(static_cast<std::size_t>(beta.front()) + 1, 0);
  for (int b : beta) occupied[static_cast<std::size_t>(b)] = 1;

  for (std::size_t idx = 0; idx < beta.size(); ++idx) {
    const int from = beta[idx];
    const int to = from - length;
    if (to < 0 || occupied[static_cast<std::size_t>(to)]) continue;
    int height = 0;
    for (int p = to + 1; p < from; ++p) height += occupied[static_cast<std::size_t>(p)];
    std::vector<int> moved = beta;
    moved[idx] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    out.push_back(BorderStrip{length, height, from_beta(moved)});
  }
  return out;
}

std::size_t MnEvaluator::KeyHash::operator()(const std::vector<int>& key) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : key) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

MnEvaluator::MnEvaluator(Partition mu) : mu_(std::move(mu)) {}

CharValue MnEvaluator::operator()(const Partition& lam) {
  require_same_size(lam, mu_.size());
  return eval(lam, 0);
}

const CharValue& MnEvaluator::eval(const Partition& lam, std::size_t consumed) {
  std::vector<int> key(lam.parts().begin(), lam.parts().end());
  key.push_back(-static_cast<int>(consumed) - 1);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  CharValue value = 0;
  if (consumed == mu_.length()) {
    value = lam.empty() ? 1 : 0;
  } else {
    for (const BorderStrip& strip : border_strips(lam, mu_[consumed])) {
      const CharValue& sub = eval(strip.remainder, consumed + 1);
      if (strip.height % 2 == 0)
        value += sub;
      else
        value -= sub;
    }
  }
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

CharValue mn_character(const CharQuery& q) { return mn_character(q.lam, q.mu); }

CharValue mn_character(const Partition& lam, const Partition& mu) {
  MnEvaluator eval(mu);
  return eval(lam);
}

CharValue mn_character_sequence(const Partition& lam, std::span<const int> strip_lengths) {
  int total = 0;
  for (int k : strip_lengths) {
    if (k < 1) throw std::invalid_argument("mn_character_sequence: strip lengths must be positive");
    total += k;
  }
  require_same_size(lam, total);
  if (strip_lengths.empty()) return 1;
  CharValue value = 0;
  for (const BorderStrip& strip : border_strips(lam, strip_lengths.front())) {
    CharValue sub = mn_character_sequence(strip.remainder, strip_lengths.subspan(1));
    if (strip.height % 2 == 0)
      value += sub;
    else
      value -= sub;
  }
  return value;
}

bool quick_vanish(const HookMultiset& lam_hooks, const Partition& mu) {
  return std::any_of(mu.parts().begin(), mu.parts().end(), [&](int part) { return !lam_hooks.contains(part); });
}

bool quick_vanish(const CharQuery& q) {
  require_same_size(q.lam, q.mu.size());
  return quick_vanish(hook_multiset(q.lam), q.mu);
}

BigCount dimension(const Partition& lam) {
  BigCount denom = 1;
  for (const auto& [h, mult] : hook_multiset(lam).counts) denom *= pow_int(h, static_cast<unsigned long>(mult));
  BigCount out = factorial(static_cast<unsigned long>(lam.size()));
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), denom.get_mpz_t());
  return out;
}

BigCount centralizer_order(const Partition& mu) {
  std::map<int, unsigned long> mult;
  for (int part : mu.parts()) ++mult[part];
  BigCount z = 1;
  for (const auto& [part, m] : mult) z *= pow_int(part, m) * factorial(m);
  return z;
}

}  // namespace corz
