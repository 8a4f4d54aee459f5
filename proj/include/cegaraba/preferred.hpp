#pragma once

#include "cegaraba/engine.hpp"
#include "cegaraba/framework.hpp"
#include "cegaraba/results.hpp"

namespace cegaraba {

/// Complete-set test for plain ABA: A is conflict-free, no member is attacked
/// by the closure of the assumptions A does not defeat, and every non-member
/// is. Throws std::invalid_argument if `f` carries preferences.
bool check_complete(const Framework& f, const AssumptionSet& a);

/// YES iff `s` is derivable from every preferred assumption set. On NO the
/// witness is a preferred set not deriving `s`.
Decision skeptical_preferred(const Framework& f, SentenceId s, SessionOptions opts = {});

struct Enumeration {
  ExtensionFamily sets;
  RunStats stats;
};

/// All preferred assumption sets, canonical order.
Enumeration enumerate_preferred(const Framework& f, SessionOptions opts = {});

}  // namespace cegaraba
