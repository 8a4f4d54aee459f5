#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cegaraba/benchgen.hpp"
#include "cegaraba/framework.hpp"

namespace cegaraba::testing {

// Three assumptions; c is strictly preferred over a, which turns the attack of
// {a} on c around.
inline constexpr const char* kExample1 =
    "a a\na b\na c\n"
    "c a a_c\nc b x\nc c y\n"
    "r x a\nr y a\n"
    "p c a\n";

// Two mutually attacking assumptions that both derive z.
inline constexpr const char* kMutual =
    "a a\na b\n"
    "c a x\nc b y\n"
    "r x b\nr y a\nr z a\nr z b\n";

inline constexpr const char* kSingle = "a a\nc a x\n";

inline Framework example1() { return parse_framework(kExample1); }
inline Framework mutual() { return parse_framework(kMutual); }

inline AssumptionSet names(const Framework& f, std::vector<std::string> ns) { return f.assumptions_from_names(ns); }

inline SentenceId sid(const Framework& f, const std::string& name) { return *f.find(name); }

/// Small generated framework: at most 12 sentences, 6 assumptions and 15 rules.
inline GenParams small_params(std::uint64_t seed, double pref_prob) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  GenParams p;
  p.n_sentences = uniform_between(rng, 3, 12);
  const std::size_t m = uniform_between(rng, 1, std::min<std::size_t>(6, p.n_sentences - 1));
  p.asm_ratio = static_cast<double>(m) / static_cast<double>(p.n_sentences);
  p.rules_per_head_max = std::max<std::size_t>(1, 15 / (p.n_sentences - m));
  p.body_len_max = 3;
  p.pref_prob = pref_prob;
  p.seed = seed;
  return p;
}

inline Framework small_framework(std::uint64_t seed, double pref_prob) {
  return gen_framework(small_params(seed, pref_prob));
}

inline AssumptionSet random_subset(const Framework& f, std::mt19937_64& rng) {
  AssumptionSet s = f.no_assumptions();
  for (AssumptionId a = 0; a < f.num_assumptions(); ++a)
    if (rng() & 1U) s.insert(a);
  return s;
}

/// Every subset of the assumptions, by bitmask.
inline std::vector<AssumptionSet> all_subsets(const Framework& f) {
  const std::size_t m = f.num_assumptions();
  std::vector<AssumptionSet> out;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    AssumptionSet s = f.no_assumptions();
    for (AssumptionId a = 0; a < m; ++a)
      if (mask >> a & 1U) s.insert(a);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace cegaraba::testing
