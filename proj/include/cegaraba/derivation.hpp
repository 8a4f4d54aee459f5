#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "cegaraba/framework.hpp"

namespace cegaraba {

enum class AttackKind { kNone, kNormal, kReverse, kBoth };

/// Pairs (z, s) with s reachable from assumption z along body-to-head edges of
/// rules triggered by the base set.
class ReachRelation {
 public:
  ReachRelation() = default;
  ReachRelation(std::size_t num_assumptions, std::size_t num_sentences);

  bool contains(AssumptionId z, SentenceId s) const { return rows_[z].contains(s); }
  const SentenceSet& reachable_from(AssumptionId z) const { return rows_[z]; }
  std::vector<std::pair<AssumptionId, SentenceId>> pairs() const;
  bool empty() const;

  friend bool operator==(const ReachRelation&, const ReachRelation&) = default;

 private:
  friend class Deriver;
  std::vector<SentenceSet> rows_;
};

/// Forward-chaining workhorse bound to one framework. Keeps scratch buffers
/// and per-assumption caches between calls, so instances are not shareable
/// across threads; the free functions below each use a fresh one.
class Deriver {
 public:
  explicit Deriver(const Framework& f);

  const Framework& framework() const { return *f_; }

  /// Least superset of X closed under the rules.
  SentenceSet closure(const AssumptionSet& x);
  void closure_into(const AssumptionSet& x, SentenceSet& out);

  /// closure({a in A : not a < t})
  SentenceSet pref_closure(const AssumptionSet& a, AssumptionId t);

  const SentenceSet& singleton_closure(AssumptionId t);
  /// {x : t < x and contrary(x) in closure({t})}; any member of A in this set
  /// reversely attacks t on its own.
  const AssumptionSet& reverse_witnesses(AssumptionId t);

  ReachRelation triggered_reach(const AssumptionSet& x);

  AttackKind attacks_singleton(const AssumptionSet& a, AssumptionId t);
  /// {u : A does not <-attack u}
  AssumptionSet undefeated(const AssumptionSet& a);
  /// True iff A <-attacks B (normal or reverse).
  bool set_attacks(const AssumptionSet& a, const AssumptionSet& b);
  bool normally_attacks(const AssumptionSet& a, const AssumptionSet& b);
  bool reversely_attacks(const AssumptionSet& a, const AssumptionSet& b);

  /// {x : contrary(x) in derived}
  AssumptionSet defeated_by(const SentenceSet& derived) const;
  /// No member of A has its contrary derivable from A (preference-free).
  bool conflict_free(const AssumptionSet& a);

 private:
  void run(const AssumptionSet& x, SentenceSet& out, std::vector<char>* fired);
  bool contrary_in(AssumptionId a, const SentenceSet& s) const { return s.test(f_->contrary(a)); }

  const Framework* f_;
  std::vector<std::uint32_t> body_size_;
  std::vector<std::uint32_t> remaining_;
  std::vector<SentenceId> stack_;
  std::vector<char> fired_;
  std::vector<SentenceSet> singleton_;
  std::vector<AssumptionSet> reverse_witness_;
  std::vector<char> singleton_ready_;
  std::unordered_map<AssumptionSet, SentenceSet, IndexSetHash<AssumptionTag>> memo_;
};

SentenceSet closure(const Framework& f, const AssumptionSet& x);
SentenceSet pref_closure(const Framework& f, const AssumptionSet& a, AssumptionId t);
ReachRelation triggered_reach(const Framework& f, const AssumptionSet& x);
AttackKind attacks_singleton_plus(const Framework& f, const AssumptionSet& a, AssumptionId t);
AssumptionSet undefeated_set(const Framework& f, const AssumptionSet& a);
bool set_attacks_plus(const Framework& f, const AssumptionSet& a, const AssumptionSet& b);

}  // namespace cegaraba
