#include "cegaraba/benchgen.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace cegaraba {

std::uint64_t uniform_between(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return rng();
  const std::uint64_t range = span + 1;
  // Reject the top sliver so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + x % range;
}

double unit_real(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

namespace {

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_between(rng, 0, i - 1)]);
}

}  // namespace

std::size_t assumption_count(const GenParams& p) {
  return static_cast<std::size_t>(std::llround(static_cast<double>(p.n_sentences) * p.asm_ratio));
}

void validate(const GenParams& p) {
  if (!(p.asm_ratio > 0.0 && p.asm_ratio < 1.0)) throw std::invalid_argument("asm_ratio must lie in (0, 1)");
  if (p.rules_per_head_max < 1) throw std::invalid_argument("rules_per_head_max must be at least 1");
  if (p.body_len_max < 1) throw std::invalid_argument("body_len_max must be at least 1");
  if (!(p.pref_prob >= 0.0 && p.pref_prob <= 1.0)) throw std::invalid_argument("pref_prob must lie in [0, 1]");
  if (assumption_count(p) < 1) throw std::invalid_argument("parameters yield no assumptions");
  if (assumption_count(p) >= p.n_sentences) throw std::invalid_argument("parameters leave no non-assumption sentence");
}

Framework gen_framework(const GenParams& p) {
  validate(p);
  std::mt19937_64 rng(p.seed);
  const std::size_t n = p.n_sentences;
  const std::size_t m = assumption_count(p);

  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "s" + std::to_string(i);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);

  RawFramework raw;
  for (std::size_t i = 0; i < m; ++i) {
    const std::string& a = names[order[i]];
    raw.assumptions.push_back({a, 0});
    raw.contraries.push_back({a, names[uniform_between(rng, 0, n - 1)], 0});
  }

  const std::size_t body_max = std::min(p.body_len_max, n);
  std::vector<std::size_t> pick(n);
  for (std::size_t i = m; i < n; ++i) {
    const std::size_t k = uniform_between(rng, 1, p.rules_per_head_max);
    for (std::size_t r = 0; r < k; ++r) {
      const std::size_t len = uniform_between(rng, 1, body_max);
      // Partial Fisher-Yates gives `len` distinct sentences.
      std::iota(pick.begin(), pick.end(), 0);
      RawFramework::RawRule rule{names[order[i]], {}, 0};
      for (std::size_t j = 0; j < len; ++j) {
        std::swap(pick[j], pick[uniform_between(rng, j, n - 1)]);
        rule.body.push_back(names[pick[j]]);
      }
      raw.rules.push_back(std::move(rule));
    }
  }

  std::vector<std::size_t> perm(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
  shuffle(perm, rng);
  if (p.pref_prob > 0.0) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (unit_real(rng) < p.pref_prob) raw.prefs.push_back({names[perm[i]], names[perm[j]], 0});
  }

  std::vector<std::string> dup_warnings;
  return Framework::build(raw, &dup_warnings);
}

}  // namespace cegaraba
