#include "cegaraba/preferred.hpp"

#include <stdexcept>

#include "cegaraba/derivation.hpp"

namespace cegaraba {

namespace {

void require_plain(const Framework& f) {
  if (f.has_preferences()) throw std::invalid_argument("preferred semantics is defined for ABA without preferences");
}

}  // namespace

bool check_complete(const Framework& f, const AssumptionSet& a) {
  require_plain(f);
  Deriver d(f);
  const SentenceSet derived = d.closure(a);
  const AssumptionSet defeated = d.defeated_by(derived);
  if (defeated.intersects(a)) return false;
  const AssumptionSet attacked = d.defeated_by(d.closure(defeated.complement()));
  return !attacked.intersects(a) && (a | attacked) == f.all_assumptions();
}

Decision skeptical_preferred(const Framework& f, SentenceId s, SessionOptions opts) {
  require_plain(f);
  if (s >= f.num_sentences()) throw std::invalid_argument("unknown query sentence");

  Session session(f, {Condition::complete_fixpoint()}, opts);
  const Condition forbid[] = {Condition::forbid_derives(s)};
  Decision d;
  auto finish = [&](Answer a) {
    d.answer = a;
    d.stats.engine_calls = session.solve_calls();
    return d;
  };

  const AssumptionSet none = f.no_assumptions();
  while (auto model = session.solve(none, forbid)) {
    ++d.stats.candidates;
    AssumptionSet current = std::move(model->in_set);
    session.add_exclusion(Exclusion::subset_of(current));
    // Grow to a maximal complete set that still avoids s.
    while (auto bigger = session.solve(current, forbid)) {
      current = std::move(bigger->in_set);
      session.add_exclusion(Exclusion::subset_of(current));
    }
    // No query constraint here: a complete proper superset deriving s means
    // `current` is not preferred.
    if (!session.solve(current)) {
      d.witness = std::move(current);
      return finish(Answer::kNo);
    }
  }
  return finish(Answer::kYes);
}

Enumeration enumerate_preferred(const Framework& f, SessionOptions opts) {
  require_plain(f);
  Session session(f, {Condition::complete_fixpoint()}, opts);
  Enumeration out;
  while (auto model = session.solve()) {
    ++out.stats.candidates;
    AssumptionSet current = std::move(model->in_set);
    session.add_exclusion(Exclusion::subset_of(current));
    while (auto bigger = session.solve(current)) {
      current = std::move(bigger->in_set);
      session.add_exclusion(Exclusion::subset_of(current));
    }
    out.sets.push_back(std::move(current));
  }
  out.stats.engine_calls = session.solve_calls();
  canonicalize(out.sets);
  return out;
}

}  // namespace cegaraba
