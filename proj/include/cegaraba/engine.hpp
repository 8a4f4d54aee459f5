#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "cegaraba/derivation.hpp"
#include "cegaraba/framework.hpp"

namespace cegaraba {

enum class ConditionKind {
  kConflictFree,
  kRequireDerives,
  kForbidDerives,
  kCompleteFixpoint,
  kComputeUndefeated,
  kPrune,
  kAttacks,        // the candidate <-attacks `set`
  kNotAttackedBy,  // `set` does not <-attack the candidate
};

struct Condition {
  ConditionKind kind = ConditionKind::kConflictFree;
  SentenceId sentence = 0;
  AssumptionSet set;

  static Condition conflict_free() { return {ConditionKind::kConflictFree, 0, {}}; }
  static Condition require_derives(SentenceId s) { return {ConditionKind::kRequireDerives, s, {}}; }
  static Condition forbid_derives(SentenceId s) { return {ConditionKind::kForbidDerives, s, {}}; }
  static Condition complete_fixpoint() { return {ConditionKind::kCompleteFixpoint, 0, {}}; }
  static Condition compute_undefeated() { return {ConditionKind::kComputeUndefeated, 0, {}}; }
  static Condition prune() { return {ConditionKind::kPrune, 0, {}}; }
  static Condition attacks(AssumptionSet target) { return {ConditionKind::kAttacks, 0, std::move(target)}; }
  static Condition not_attacked_by(AssumptionSet by) {
    return {ConditionKind::kNotAttackedBy, 0, std::move(by)};
  }
};

enum class ExclusionKind { kSubsetOf, kExactly };

/// Persistent blocking constraint. subset-of(W) rejects every in-set that is
/// a subset of W; exactly(W) rejects W alone.
struct Exclusion {
  ExclusionKind kind = ExclusionKind::kExactly;
  AssumptionSet witness;

  static Exclusion subset_of(AssumptionSet w) { return {ExclusionKind::kSubsetOf, std::move(w)}; }
  static Exclusion exactly(AssumptionSet w) { return {ExclusionKind::kExactly, std::move(w)}; }
};

struct Model {
  AssumptionSet in_set;
  SentenceSet closure;
  std::optional<AssumptionSet> undefeated;  // present iff undefeated sets are computed
};

/// kAuto hands sessions made only of conflict-freeness, derivation
/// requirements and the complete fixpoint to a clause-learning search, which
/// returns some satisfying assignment fixed by the call history. kBranching
/// always walks assignments in visiting order.
enum class Strategy { kAuto, kBranching };

struct SessionOptions {
  /// Prune partial assignments with monotone bounds. Off means every complete
  /// assignment is evaluated; results are identical either way.
  bool propagate = true;
  /// Continue each call signature from its previous answer instead of the root.
  bool resume = true;
  Strategy strategy = Strategy::kAuto;
};

class ClauseSearch;

/// Incremental candidate search over in/out assignments of the assumptions in
/// `pool` (everything else is fixed out). solve() returns an assignment
/// satisfying every condition and exclusion, or nothing if none exists. The
/// branching search visits assignments in ascending assumption id, "out"
/// before "in", and returns the first match; either way the answer is a
/// function of the session's call history.
class Session {
 public:
  Session(const Framework& f, std::vector<Condition> base, SessionOptions opts = {});
  Session(const Framework& f, std::vector<Condition> base, AssumptionSet pool, SessionOptions opts = {});
  Session(Session&&) noexcept;
  Session& operator=(Session&&) noexcept;
  ~Session();

  void add_exclusion(Exclusion e);
  std::optional<Model> solve();
  std::optional<Model> solve(const AssumptionSet& floor, std::span<const Condition> extra = {});

  const Framework& framework() const { return *f_; }
  const AssumptionSet& pool() const { return pool_; }
  std::size_t solve_calls() const { return calls_; }
  std::size_t nodes_visited() const { return nodes_; }
  std::size_t num_exclusions() const { return subset_excl_.size() + exact_excl_.size(); }

 private:
  friend class Search;

  std::optional<Model> solve_by_clauses(const AssumptionSet& floor, std::span<const Condition> extra);

  struct Cursor {
    bool exhausted = false;
    std::vector<char> bits;
  };

  const Framework* f_;
  std::vector<Condition> base_;
  AssumptionSet pool_;
  SessionOptions opts_;
  Deriver deriver_;
  std::vector<AssumptionSet> subset_excl_;
  std::unordered_set<AssumptionSet, IndexSetHash<AssumptionTag>> exact_excl_;
  std::map<std::string, Cursor> cursors_;
  std::unique_ptr<ClauseSearch> clauses_;
  std::size_t calls_ = 0;
  std::size_t nodes_ = 0;
};

/// Throws std::invalid_argument for contradictory or malformed condition lists.
void check_conditions(const Framework& f, std::span<const Condition> conditions);

}  // namespace cegaraba
