#include <gtest/gtest.h>

#include <array>

#include "cegaraba/framework.hpp"
#include "support.hpp"

namespace cegaraba {
namespace {

using testing::example1;
using testing::kExample1;
using testing::names;
using testing::sid;

bool has_kind(const FrameworkError& e, ViolationKind k) {
  for (const auto& v : e.violations())
    if (v.kind == k) return true;
  return false;
}

template <class F>
FrameworkError error_of(F&& fn) {
  try {
    fn();
  } catch (const FrameworkError& e) {
    return e;
  }
  ADD_FAILURE() << "expected FrameworkError";
  return FrameworkError({});
}

TEST(Framework, ParsesExampleOne) {
  const Framework f = example1();
  EXPECT_EQ(f.num_assumptions(), 3U);
  EXPECT_EQ(f.num_rules(), 2U);
  EXPECT_EQ(f.num_sentences(), 6U);
  const AssumptionId a = *f.assumption_of(sid(f, "a"));
  const AssumptionId c = *f.assumption_of(sid(f, "c"));
  EXPECT_TRUE(f.prefs().strict(a, c));
  EXPECT_FALSE(f.prefs().strict(c, a));
  EXPECT_TRUE(f.has_preferences());
}

TEST(Framework, MinimalInput) {
  const Framework f = parse_framework(testing::kSingle);
  EXPECT_EQ(f.num_assumptions(), 1U);
  EXPECT_EQ(f.num_rules(), 0U);
  EXPECT_EQ(f.name(contrary_of(f, "a")), "x");
}

TEST(Framework, ContraryLookup) {
  const Framework f = example1();
  EXPECT_EQ(f.name(contrary_of(f, "b")), "x");
  EXPECT_EQ(f.name(contrary_of(f, "c")), "y");
  EXPECT_EQ(f.name(contrary_of(f, "a")), "a_c");
  EXPECT_THROW(contrary_of(f, "x"), std::invalid_argument);
}

TEST(Framework, ExampleOneValidates) { EXPECT_TRUE(validate(parse_raw(kExample1)).empty()); }

TEST(Framework, RejectsAssumptionHead) {
  const auto e = error_of([] { parse_framework("a a\na b\nc a x\nc b y\nr b a\n"); });
  EXPECT_TRUE(has_kind(e, ViolationKind::kNotFlat));
  EXPECT_EQ(e.violations().front().line, 5);
}

TEST(Framework, RejectsMissingContrary) {
  const auto e = error_of([] { parse_framework("a a\na b\nc a x\n"); });
  EXPECT_TRUE(has_kind(e, ViolationKind::kMissingContrary));
}

TEST(Framework, RejectsDuplicateContrary) {
  const auto e = error_of([] { parse_framework("a a\nc a x\nc a y\n"); });
  EXPECT_TRUE(has_kind(e, ViolationKind::kDuplicateDeclaration));
}

TEST(Framework, RejectsPreferenceOnSentence) {
  const auto e = error_of([] { parse_framework("a a\nc a x\np a x\n"); });
  EXPECT_TRUE(has_kind(e, ViolationKind::kNonAssumptionPreference));
}

TEST(Framework, RejectsMalformedLine) {
  const auto e = error_of([] { parse_framework("a a\nc a\n"); });
  EXPECT_TRUE(has_kind(e, ViolationKind::kMalformed));
  EXPECT_EQ(e.violations().front().line, 2);
  EXPECT_THROW(parse_framework("q a\n"), FrameworkError);
}

TEST(Framework, CommentsAndBlankLines) {
  const Framework f = parse_framework("# header\n\na a   # trailing\nc a x\n\nr x\n");
  EXPECT_EQ(f.num_rules(), 1U);
  EXPECT_EQ(f.fact_rules().size(), 1U);
}

TEST(Framework, DuplicateRulesMergeWithWarning) {
  std::vector<std::string> warnings;
  const Framework f = parse_framework("a a\nc a x\nr x a\nr x a\n", &warnings);
  EXPECT_EQ(f.num_rules(), 1U);
  EXPECT_EQ(warnings.size(), 1U);
}

TEST(Framework, SerializeRoundTrips) {
  const Framework f = example1();
  const std::string text = serialize(f);
  EXPECT_EQ(parse_framework(text), f);
  EXPECT_EQ(serialize(parse_framework(text)), text);
}

TEST(Framework, SerializeRoundTripsGenerated) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Framework f = testing::small_framework(seed, 0.4);
    EXPECT_EQ(parse_framework(serialize(f)), f) << seed;
  }
}

TEST(Framework, WithoutPreferences) {
  const Framework f = example1().without_preferences();
  EXPECT_FALSE(f.has_preferences());
  EXPECT_EQ(f.num_rules(), 2U);
}

TEST(Framework, FormatSortsNames) {
  const Framework f = example1();
  EXPECT_EQ(f.format(names(f, {"c", "b"})), "b c");
  EXPECT_EQ(f.format(f.no_assumptions()), "");
}

TEST(PrefClose, SinglePair) {
  const std::array<PrefPair, 1> pairs{{{2, 0}}};
  const PrefRelation r = pref_close(3, pairs);
  EXPECT_TRUE(r.strict(0, 2));
  EXPECT_FALSE(r.strict(2, 0));
  EXPECT_TRUE(r.leq(0, 2));
  EXPECT_TRUE(r.leq(1, 1));
}

TEST(PrefClose, TwoCycleHasNoStrictPart) {
  const std::array<PrefPair, 2> pairs{{{0, 1}, {1, 0}}};
  const PrefRelation r = pref_close(2, pairs);
  EXPECT_FALSE(r.strict(0, 1));
  EXPECT_FALSE(r.strict(1, 0));
  EXPECT_TRUE(r.leq(0, 1));
  EXPECT_TRUE(r.empty());
}

TEST(PrefClose, Transitive) {
  // c over b, b over a, with a=0, b=1, c=2.
  const std::array<PrefPair, 2> pairs{{{2, 1}, {1, 0}}};
  const PrefRelation r = pref_close(3, pairs);
  EXPECT_TRUE(r.strict(0, 2));
  EXPECT_EQ(r.strictly_below(2).size(), 2U);
  EXPECT_EQ(r.strictly_above(0).size(), 2U);
}

TEST(PrefClose, RejectsOutOfRange) {
  const std::array<PrefPair, 1> pairs{{{0, 3}}};
  EXPECT_THROW(pref_close(2, pairs), std::out_of_range);
}

}  // namespace
}  // namespace cegaraba
