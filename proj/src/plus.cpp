#include "cegaraba/plus.hpp"

#include <stdexcept>

#include "cegaraba/derivation.hpp"

namespace cegaraba {

namespace {

// Searches for B with `required` <= B <= `allowed` that <-attacks `target`
// while A does not <-attack B. Both attack directions only grow with B. A
// greedy maximal B that A leaves alone either attacks the target or rules
// out all of its subsets, so some witness must add a member outside it.
bool attacker_within(Deriver& d, const AssumptionSet& a, const AssumptionSet& target, AssumptionSet required,
                     AssumptionSet allowed) {
  if (d.set_attacks(a, required) || !d.set_attacks(allowed, target)) return false;
  AssumptionSet grown = required;
  (allowed - required).for_each([&](std::size_t x) {
    grown.insert(x);
    if (d.set_attacks(a, grown)) grown.erase(x);
  });
  if (d.set_attacks(grown, target)) return true;
  for (std::size_t x : (allowed - grown).members()) {
    AssumptionSet with = required;
    with.insert(x);
    if (attacker_within(d, a, target, with, allowed)) return true;
    allowed.erase(x);
  }
  return false;
}

// Is there a B within `pool` that <-attacks `target` without A <-attacking B?
// B avoids every assumption A attacks on its own, so it lies within pool & U.
bool unanswered_attack(Deriver& d, const AssumptionSet& a, const AssumptionSet& u, const AssumptionSet& target,
                       const AssumptionSet& pool) {
  const AssumptionSet p = pool & u;
  return attacker_within(d, a, target, p - p, p);
}

bool admissible_check(Deriver& d, const AssumptionSet& a, const AssumptionSet& u) {
  return !unanswered_attack(d, a, u, a, u);
}

bool defense_check(const Framework& f, Deriver& d, const AssumptionSet& a, const AssumptionSet& u,
                   const AssumptionSet& pool, AssumptionId target) {
  AssumptionSet t = f.no_assumptions();
  t.insert(target);
  return !unanswered_attack(d, a, u, t, pool);
}

// Admissible, and every undefeated non-member lacks A's defense. Members
// outside U are attacked by A and so cannot be defended by a conflict-free A.
bool complete_check(const Framework& f, Deriver& d, const Model& m) {
  const AssumptionSet& a = m.in_set;
  const AssumptionSet& u = *m.undefeated;
  if (!admissible_check(d, a, u)) return false;
  const AssumptionSet all = f.all_assumptions();
  bool complete = true;
  (u - a).for_each([&](std::size_t t) {
    if (complete && defense_check(f, d, a, u, all, static_cast<AssumptionId>(t))) complete = false;
  });
  return complete;
}

std::vector<Condition> candidate_conditions(std::optional<SentenceId> query, bool prune) {
  std::vector<Condition> conds{Condition::conflict_free(), Condition::compute_undefeated()};
  if (query) conds.push_back(Condition::require_derives(*query));
  if (prune) conds.push_back(Condition::prune());
  return conds;
}

/// Draws candidates until `visit` returns true; every candidate is excluded
/// exactly after it is checked.
template <class Visit>
void candidate_loop(const Framework& f, std::vector<Condition> conds, SessionOptions opts, RunStats& stats,
                    Visit visit) {
  Session cand(f, std::move(conds), opts);
  Deriver d(f);
  while (auto m = cand.solve()) {
    ++stats.candidates;
    if (visit(*m, d)) break;
    cand.add_exclusion(Exclusion::exactly(m->in_set));
  }
  stats.engine_calls += cand.solve_calls();
}

void check_query(const Framework& f, SentenceId s) {
  if (s >= f.num_sentences()) throw std::invalid_argument("unknown query sentence");
}

}  // namespace

bool is_admissible_plus(const Framework& f, const AssumptionSet& a, const AssumptionSet& u) {
  if (undefeated_set(f, a) != u) throw std::invalid_argument("U is not the undefeated set of A");
  Deriver d(f);
  return admissible_check(d, a, u);
}

bool defends_target_plus(const Framework& f, const AssumptionSet& a, const AssumptionSet& u, AssumptionId target,
                         SuspectPool pool) {
  if (target >= f.num_assumptions() || !u.test(target)) throw std::invalid_argument("target is not in U");
  if (undefeated_set(f, a) != u) throw std::invalid_argument("U is not the undefeated set of A");
  Deriver d(f);
  return defense_check(f, d, a, u, pool == SuspectPool::kUndefeated ? u : f.all_assumptions(), target);
}

bool prune_holds(const Framework& f, const AssumptionSet& a, const AssumptionSet& u) {
  return !(u - a).intersects(undefeated_set(f, u));
}

Decision credulous_adm_plus(const Framework& f, SentenceId s, SessionOptions opts) {
  check_query(f, s);
  Decision d;
  candidate_loop(f, candidate_conditions(s, false), opts, d.stats, [&](const Model& m, Deriver& der) {
    if (!admissible_check(der, m.in_set, *m.undefeated)) return false;
    d.answer = Answer::kYes;
    d.witness = m.in_set;
    return true;
  });
  return d;
}

Decision credulous_com_plus(const Framework& f, SentenceId s, AbstractionMode mode, SessionOptions opts) {
  check_query(f, s);
  Decision d;
  candidate_loop(f, candidate_conditions(s, mode == AbstractionMode::kStrong), opts, d.stats, [&](const Model& m, Deriver& der) {
    if (!complete_check(f, der, m)) return false;
    d.answer = Answer::kYes;
    d.witness = m.in_set;
    return true;
  });
  return d;
}

PlusResult enumerate_plus(const Framework& f, PlusSemantics sem, AbstractionMode mode, SessionOptions opts) {
  PlusResult out;
  const bool prune = mode == AbstractionMode::kStrong;
  switch (sem) {
    case PlusSemantics::kAdmissible:
      candidate_loop(f, candidate_conditions(std::nullopt, false), opts, out.stats, [&](const Model& m, Deriver& der) {
        if (admissible_check(der, m.in_set, *m.undefeated)) out.family.push_back(m.in_set);
        return false;
      });
      canonicalize(out.family);
      break;
    case PlusSemantics::kComplete:
    case PlusSemantics::kGrounded:
      candidate_loop(f, candidate_conditions(std::nullopt, prune), opts, out.stats, [&](const Model& m, Deriver& der) {
        if (complete_check(f, der, m)) out.family.push_back(m.in_set);
        return false;
      });
      canonicalize(out.family);
      if (sem == PlusSemantics::kGrounded && !out.family.empty()) {
        AssumptionSet meet = f.all_assumptions();
        for (const auto& e : out.family) meet &= e;
        out.set = std::move(meet);
      }
      break;
    case PlusSemantics::kFindComplete:
      candidate_loop(f, candidate_conditions(std::nullopt, prune), opts, out.stats, [&](const Model& m, Deriver& der) {
        if (!complete_check(f, der, m)) return false;
        out.set = m.in_set;
        return true;
      });
      break;
  }
  return out;
}

}  // namespace cegaraba
