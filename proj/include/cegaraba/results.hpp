#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "cegaraba/index_set.hpp"

namespace cegaraba {

enum class Answer { kNo, kYes };

struct RunStats {
  std::size_t candidates = 0;    // outer-loop candidate models
  std::size_t engine_calls = 0;  // solve() invocations over all sessions
};

struct Decision {
  Answer answer = Answer::kNo;
  /// YES for credulous tasks: the accepted set. NO for skeptical tasks: the
  /// counterexample.
  std::optional<AssumptionSet> witness;
  RunStats stats;
};

/// Assumption sets in shortlex order, no duplicates.
using ExtensionFamily = std::vector<AssumptionSet>;

inline void canonicalize(ExtensionFamily& family) {
  std::sort(family.begin(), family.end(), shortlex_less<AssumptionTag>);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace cegaraba
