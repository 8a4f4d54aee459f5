#pragma once

#include <optional>

#include "cegaraba/engine.hpp"
#include "cegaraba/framework.hpp"
#include "cegaraba/results.hpp"

namespace cegaraba {

/// Candidate generation for <-complete search. Strong adds the pruning
/// condition: every undefeated non-member must be attacked by the undefeated
/// set. Both modes yield the same answers.
enum class AbstractionMode { kWeak, kStrong };

/// Where the defense check looks for attackers of a target.
enum class SuspectPool { kAllAssumptions, kUndefeated };

/// A (conflict-free) with U = undefeated_set(A) is <-admissible iff no B within
/// U <-attacks A without A <-attacking B. Throws std::invalid_argument if U is
/// not the undefeated set of A.
bool is_admissible_plus(const Framework& f, const AssumptionSet& a, const AssumptionSet& u);

/// True iff every set that <-attacks {target} is <-attacked by A. Throws if
/// `target` is not in U.
bool defends_target_plus(const Framework& f, const AssumptionSet& a, const AssumptionSet& u, AssumptionId target,
                         SuspectPool pool = SuspectPool::kAllAssumptions);

/// Every y in U \ A is <-attacked by U on its own.
bool prune_holds(const Framework& f, const AssumptionSet& a, const AssumptionSet& u);

Decision credulous_adm_plus(const Framework& f, SentenceId s, SessionOptions opts = {});
Decision credulous_com_plus(const Framework& f, SentenceId s, AbstractionMode mode, SessionOptions opts = {});

enum class PlusSemantics { kAdmissible, kComplete, kFindComplete, kGrounded };

struct PlusResult {
  ExtensionFamily family;           // kAdmissible, kComplete
  std::optional<AssumptionSet> set;  // kFindComplete, kGrounded; empty means none exists
  RunStats stats;
};

PlusResult enumerate_plus(const Framework& f, PlusSemantics sem, AbstractionMode mode = AbstractionMode::kStrong,
                          SessionOptions opts = {});

}  // namespace cegaraba
