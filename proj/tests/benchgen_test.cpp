#include <gtest/gtest.h>

#include "cegaraba/benchgen.hpp"

namespace cegaraba {
namespace {

TEST(Benchgen, AssumptionCount) {
  const Framework f = gen_framework({.n_sentences = 100, .asm_ratio = 0.15, .seed = 1});
  EXPECT_EQ(f.num_assumptions(), 15U);
  EXPECT_EQ(f.num_sentences(), 100U);
  EXPECT_FALSE(f.has_preferences());
}

TEST(Benchgen, FlatAndBounded) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GenParams p{.n_sentences = 40, .asm_ratio = 0.3, .rules_per_head_max = 5, .body_len_max = 4,
                      .pref_prob = 0.4, .seed = seed};
    const Framework f = gen_framework(p);
    std::vector<std::size_t> per_head(f.num_sentences(), 0);
    for (const auto& r : f.rules()) {
      EXPECT_FALSE(f.is_assumption(r.head));
      EXPECT_GE(r.body.size(), 1U);
      EXPECT_LE(r.body.size(), 4U);
      ++per_head[r.head];
    }
    for (SentenceId s = 0; s < f.num_sentences(); ++s) {
      if (f.is_assumption(s)) continue;
      EXPECT_GE(per_head[s], 1U);
      EXPECT_LE(per_head[s], 5U);
    }
  }
}

TEST(Benchgen, Deterministic) {
  const GenParams p{.n_sentences = 60, .asm_ratio = 0.15, .pref_prob = 0.15, .seed = 42};
  EXPECT_EQ(serialize(gen_framework(p)), serialize(gen_framework(p)));
  GenParams q = p;
  q.seed = 43;
  EXPECT_NE(serialize(gen_framework(p)), serialize(gen_framework(q)));
}

TEST(Benchgen, DeclaredPreferencesAreStrict) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Framework f = gen_framework({.n_sentences = 30, .asm_ratio = 0.3, .pref_prob = 0.4, .seed = seed});
    for (const auto& p : f.declared_prefs()) EXPECT_TRUE(f.prefs().strict(p.weaker, p.stronger));
  }
}

TEST(Benchgen, PreferenceDensityFollowsProbability) {
  const Framework none = gen_framework({.n_sentences = 100, .asm_ratio = 0.3, .pref_prob = 0.0, .seed = 3});
  EXPECT_TRUE(none.declared_prefs().empty());
  const Framework all = gen_framework({.n_sentences = 100, .asm_ratio = 0.3, .pref_prob = 1.0, .seed = 3});
  EXPECT_EQ(all.declared_prefs().size(), 30U * 29U / 2U);
}

TEST(Benchgen, RejectsBadParameters) {
  EXPECT_THROW(gen_framework({.n_sentences = 10, .asm_ratio = 0.0}), std::invalid_argument);
  EXPECT_THROW(gen_framework({.n_sentences = 10, .asm_ratio = 1.0}), std::invalid_argument);
  EXPECT_THROW(gen_framework({.n_sentences = 2, .asm_ratio = 0.1}), std::invalid_argument);
  EXPECT_THROW(gen_framework({.n_sentences = 10, .asm_ratio = 0.2, .rules_per_head_max = 0}), std::invalid_argument);
  EXPECT_THROW(gen_framework({.n_sentences = 10, .asm_ratio = 0.2, .body_len_max = 0}), std::invalid_argument);
  EXPECT_THROW(gen_framework({.n_sentences = 10, .asm_ratio = 0.2, .pref_prob = 1.5}), std::invalid_argument);
}

TEST(Benchgen, UniformDrawStaysInRange) {
  std::mt19937_64 rng(7);
  std::vector<int> hits(6, 0);
  for (int i = 0; i < 6000; ++i) {
    const auto x = uniform_between(rng, 3, 8);
    ASSERT_GE(x, 3U);
    ASSERT_LE(x, 8U);
    ++hits[x - 3];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  for (int i = 0; i < 1000; ++i) {
    const double u = unit_real(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

}  // namespace
}  // namespace cegaraba
