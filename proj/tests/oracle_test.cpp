#include <gtest/gtest.h>

#include "cegaraba/derivation.hpp"
#include "cegaraba/oracle.hpp"
#include "support.hpp"

namespace cegaraba {
namespace {

using testing::example1;
using testing::names;
using testing::sid;

TEST(OracleLeafsets, ExampleOne) {
  const Framework f = example1();
  EXPECT_EQ(oracle_leafsets(f, sid(f, "x"), names(f, {"a", "b"})), LeafSetFamily{names(f, {"a"})});
  EXPECT_EQ(oracle_leafsets(f, sid(f, "a"), f.all_assumptions()), LeafSetFamily{names(f, {"a"})});
  EXPECT_TRUE(oracle_leafsets(f, sid(f, "a_c"), f.all_assumptions()).empty());
  EXPECT_TRUE(oracle_leafsets(f, sid(f, "x"), names(f, {"b", "c"})).empty());
}

TEST(OracleLeafsets, CyclicRulesStillYieldEveryLeafSet) {
  // s <- t; t <- s, b; t <- a. The tree s <- t <- (s <- t <- a), b repeats s
  // on a path yet is the only tree with leaves {a, b}.
  const Framework f = parse_framework("a a\na b\nc a p\nc b p\nr s t\nr t s b\nr t a\n");
  EXPECT_EQ(oracle_leafsets(f, sid(f, "s"), f.all_assumptions()),
            (LeafSetFamily{names(f, {"a"}), names(f, {"a", "b"})}));
}

TEST(OracleAttacks, ExampleOne) {
  const Framework f = example1();
  EXPECT_TRUE(oracle_attacks_plus(f, names(f, {"c"}), names(f, {"a"})));
  EXPECT_TRUE(oracle_attacks_plus(f, names(f, {"a"}), names(f, {"b"})));
  EXPECT_FALSE(oracle_attacks_plus(f, names(f, {"b"}), names(f, {"c"})));
}

TEST(OracleExtensions, Examples) {
  const Framework f2 = testing::mutual();
  EXPECT_EQ(oracle_extensions(f2, OracleSemantics::kPreferred), (ExtensionFamily{names(f2, {"a"}), names(f2, {"b"})}));
  const Framework f = example1();
  EXPECT_EQ(oracle_extensions(f, OracleSemantics::kAdmissiblePlus),
            (ExtensionFamily{f.no_assumptions(), names(f, {"c"}), names(f, {"b", "c"})}));
  EXPECT_EQ(oracle_extensions(f, OracleSemantics::kCompletePlus), ExtensionFamily{names(f, {"b", "c"})});
}

TEST(OracleExtensions, SizeGuard) {
  std::string text;
  for (int i = 0; i <= 16; ++i) text += "a q" + std::to_string(i) + "\nc q" + std::to_string(i) + " x\n";
  const Framework f = parse_framework(text);
  EXPECT_THROW(Oracle{f}, OracleSizeError);
}

TEST(OracleProperties, ReachMatchesLeafsets) {
  for (double p : {0.0, 0.4}) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      const Framework f = testing::small_framework(seed, p);
      const Oracle oracle(f);
      for (const auto& x : testing::all_subsets(f)) {
        const ReachRelation reach = triggered_reach(f, x);
        const SentenceSet derived = closure(f, x);
        for (SentenceId s = 0; s < f.num_sentences(); ++s) {
          const LeafSetFamily leaves = oracle.leafsets(s, x);
          EXPECT_EQ(!leaves.empty(), derived.test(s));
          for (AssumptionId z = 0; z < f.num_assumptions(); ++z) {
            const bool in_leaf = std::any_of(leaves.begin(), leaves.end(), [z](const auto& l) { return l.test(z); });
            ASSERT_EQ(in_leaf, reach.contains(z, s) && derived.test(s))
                << "seed " << seed << " s " << f.name(s) << " z " << f.assumption_name(z);
          }
        }
      }
    }
  }
}

TEST(OracleProperties, AttacksMatchDeriver) {
  for (double p : {0.0, 0.15, 0.4}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Framework f = testing::small_framework(seed, p);
      const Oracle oracle(f);
      Deriver d(f);
      const auto subsets = testing::all_subsets(f);
      for (const auto& a : subsets)
        for (const auto& b : subsets) ASSERT_EQ(oracle.attacks_plus(a, b), d.set_attacks(a, b)) << seed;
    }
  }
}

TEST(OracleProperties, PreferredAreMaximalComplete) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Framework f = testing::small_framework(seed, 0.0);
    const ExtensionFamily com = oracle_extensions(f, OracleSemantics::kComplete);
    ExtensionFamily maximal;
    for (const auto& e : com)
      if (std::none_of(com.begin(), com.end(), [&](const auto& o) { return o != e && e.is_subset_of(o); }))
        maximal.push_back(e);
    canonicalize(maximal);
    EXPECT_EQ(oracle_extensions(f, OracleSemantics::kPreferred), maximal) << seed;
  }
}

TEST(OracleProperties, EmptyPreferencesCollapse) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Framework f = testing::small_framework(seed, 0.0);
    const Oracle oracle(f);
    EXPECT_EQ(oracle.extensions(OracleSemantics::kAdmissiblePlus), oracle.extensions(OracleSemantics::kAdmissible));
    EXPECT_EQ(oracle.extensions(OracleSemantics::kCompletePlus), oracle.extensions(OracleSemantics::kComplete));
  }
}

}  // namespace
}  // namespace cegaraba
