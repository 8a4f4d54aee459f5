#include "cegaraba/sat.hpp"

#include <gtest/gtest.h>

#include <random>

namespace cegaraba::sat {
namespace {

using Cnf = std::vector<std::vector<Lit>>;

bool holds(const Cnf& cnf, std::uint32_t bits) {
  for (const auto& c : cnf) {
    bool any = false;
    for (Lit l : c) any = any || (((bits >> l.var()) & 1U) != 0) != l.negated();
    if (!any) return false;
  }
  return true;
}

bool brute_sat(const Cnf& cnf, std::size_t n) {
  for (std::uint32_t bits = 0; bits < (1U << n); ++bits)
    if (holds(cnf, bits)) return true;
  return false;
}

Cnf random_cnf(std::mt19937_64& rng, std::size_t n, std::size_t clauses) {
  Cnf cnf(clauses);
  for (auto& c : cnf) {
    const std::size_t len = 1 + rng() % 4;
    for (std::size_t i = 0; i < len; ++i) {
      const Var v = static_cast<Var>(rng() % n);
      c.push_back(rng() % 2 ? Lit::pos(v) : Lit::neg(v));
    }
  }
  return cnf;
}

TEST(SatSolver, EmptyAndTrivial) {
  Solver s;
  EXPECT_TRUE(s.solve());
  const Var v = s.new_var();
  EXPECT_TRUE(s.add_clause({Lit::pos(v)}));
  ASSERT_TRUE(s.solve());
  EXPECT_TRUE(s.value(v));
  const std::vector<Lit> flip{Lit::neg(v)};
  EXPECT_FALSE(s.solve(flip));
  EXPECT_FALSE(s.add_clause({Lit::neg(v)}));
  EXPECT_FALSE(s.solve());
}

TEST(SatSolver, RepeatedAndComplementaryLiterals) {
  Solver s;
  const Var a = s.new_var();
  const Var b = s.new_var();
  EXPECT_TRUE(s.add_clause({Lit::neg(a), Lit::neg(a)}));
  EXPECT_TRUE(s.add_clause({Lit::pos(b), Lit::neg(b)}));
  ASSERT_TRUE(s.solve());
  EXPECT_FALSE(s.value(a));
}

// Random formulas near the threshold, grown clause by clause, each step
// solved under random assumptions and checked against enumeration.
TEST(SatSolver, MatchesEnumeration) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 3 + rng() % 10;
    Solver s;
    for (std::size_t i = 0; i < n; ++i) s.new_var();
    Cnf cnf;
    for (const auto& c : random_cnf(rng, n, 5 * n)) {
      cnf.push_back(c);
      s.add_clause(c);
      Cnf with = cnf;
      std::vector<Lit> assumptions;
      for (std::size_t k = rng() % 3; k > 0; --k) {
        const Var v = static_cast<Var>(rng() % n);
        assumptions.push_back(rng() % 2 ? Lit::pos(v) : Lit::neg(v));
        with.push_back({assumptions.back()});
      }
      const bool sat = s.solve(assumptions);
      ASSERT_EQ(sat, brute_sat(with, n)) << "seed " << seed;
      if (!sat) continue;
      std::uint32_t bits = 0;
      for (Var v = 0; v < n; ++v) bits |= static_cast<std::uint32_t>(s.value(v)) << v;
      ASSERT_TRUE(holds(with, bits)) << "seed " << seed;
    }
  }
}

// Pigeonhole 7 into 6: needs many conflicts, restarts and clause reduction.
TEST(SatSolver, PigeonholeIsUnsatisfiable) {
  constexpr std::size_t kHoles = 6;
  Solver s;
  std::vector<std::vector<Var>> p(kHoles + 1, std::vector<Var>(kHoles));
  for (auto& row : p)
    for (auto& v : row) v = s.new_var();
  for (const auto& row : p) {
    std::vector<Lit> some;
    for (Var v : row) some.push_back(Lit::pos(v));
    s.add_clause(some);
  }
  for (std::size_t h = 0; h < kHoles; ++h)
    for (std::size_t i = 0; i <= kHoles; ++i)
      for (std::size_t j = i + 1; j <= kHoles; ++j) s.add_clause({Lit::neg(p[i][h]), Lit::neg(p[j][h])});
  EXPECT_FALSE(s.solve());
  EXPECT_GT(s.conflicts(), 0U);
}

}  // namespace
}  // namespace cegaraba::sat
