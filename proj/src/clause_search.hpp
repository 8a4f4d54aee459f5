#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cegaraba/derivation.hpp"
#include "cegaraba/engine.hpp"
#include "cegaraba/sat.hpp"

namespace cegaraba {

/// Clause-learning counterpart of the branching search for sessions whose
/// conditions are all expressible as clauses: conflict-freeness, derivation
/// requirements and the complete fixpoint. Both closures are encoded by rule
/// completion; cyclic support is cut lazily with loop clauses whenever a model
/// claims a sentence its assumptions do not derive.
class ClauseSearch {
 public:
  static bool supports(std::span<const Condition> conditions);

  ClauseSearch(const Framework& f, Deriver& d, std::span<const Condition> base, const AssumptionSet& pool);

  void add_exclusion(const Exclusion& e);
  /// Some in-set containing `floor` that satisfies the base and extra
  /// conditions and every exclusion. Which one depends only on the call
  /// history.
  std::optional<AssumptionSet> solve(const AssumptionSet& floor, std::span<const Condition> extra);

  std::uint64_t work() const { return solver_.decisions() + solver_.conflicts(); }

 private:
  struct Layer {
    std::vector<sat::Var> sentence;  // per non-assumption sentence
    std::vector<sat::Var> rule;      // per rule: body holds
  };

  sat::Lit in(AssumptionId a) const { return sat::Lit::pos(in_[a]); }
  sat::Lit derived(SentenceId s) const;
  sat::Lit supported(SentenceId s) const;
  void ensure_derived();
  void ensure_supported();
  void encode_layer(Layer& layer, bool second);
  sat::Lit conflict_free_switch();
  sat::Lit complete_switch();
  void add(std::vector<sat::Lit> clause);

  bool solve_founded(const std::vector<sat::Lit>& assumptions);
  bool cut_unfounded(const Layer& layer, const SentenceSet& truth);
  AssumptionSet model_in_set() const;

  const Framework& f_;
  Deriver& d_;
  AssumptionSet pool_;
  sat::Solver solver_;
  std::vector<sat::Var> in_;
  std::optional<Layer> derived_;
  std::optional<Layer> supported_;
  std::optional<sat::Lit> cf_switch_;
  std::optional<sat::Lit> complete_switch_;
  std::vector<sat::Lit> always_;  // switches of base conditions
  SentenceSet scratch_;
};

}  // namespace cegaraba
