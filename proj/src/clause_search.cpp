#include "clause_search.hpp"

#include <algorithm>

namespace cegaraba {

using sat::Lit;

bool ClauseSearch::supports(std::span<const Condition> conditions) {
  for (const auto& c : conditions) {
    switch (c.kind) {
      case ConditionKind::kConflictFree:
      case ConditionKind::kRequireDerives:
      case ConditionKind::kForbidDerives:
      case ConditionKind::kCompleteFixpoint:
      case ConditionKind::kComputeUndefeated: break;
      default: return false;
    }
  }
  return true;
}

ClauseSearch::ClauseSearch(const Framework& f, Deriver& d, std::span<const Condition> base, const AssumptionSet& pool)
    : f_(f), d_(d), pool_(pool) {
  for (AssumptionId a = 0; a < f.num_assumptions(); ++a) {
    in_.push_back(solver_.new_var());
    if (!pool.test(a)) add({~in(a)});
  }
  for (const auto& c : base) {
    switch (c.kind) {
      case ConditionKind::kConflictFree: always_.push_back(conflict_free_switch()); break;
      case ConditionKind::kCompleteFixpoint: always_.push_back(complete_switch()); break;
      case ConditionKind::kRequireDerives:
        ensure_derived();
        add({derived(c.sentence)});
        break;
      case ConditionKind::kForbidDerives:
        ensure_derived();
        add({~derived(c.sentence)});
        break;
      default: break;
    }
  }
  for (Lit s : always_) add({s});
}

void ClauseSearch::add(std::vector<Lit> clause) { solver_.add_clause(std::move(clause)); }

Lit ClauseSearch::derived(SentenceId s) const {
  if (auto a = f_.assumption_of(s)) return in(*a);
  return Lit::pos(derived_->sentence[s]);
}

// Derivable from the assumptions the candidate does not defeat.
Lit ClauseSearch::supported(SentenceId s) const {
  if (auto a = f_.assumption_of(s)) return ~derived(f_.contrary(*a));
  return Lit::pos(supported_->sentence[s]);
}

void ClauseSearch::ensure_derived() {
  if (derived_) return;
  derived_.emplace();
  encode_layer(*derived_, false);
}

void ClauseSearch::ensure_supported() {
  ensure_derived();
  if (supported_) return;
  supported_.emplace();
  encode_layer(*supported_, true);
}

// Rule completion: a sentence holds iff some rule for it has its whole body.
void ClauseSearch::encode_layer(Layer& layer, bool second) {
  const std::size_t n = f_.num_sentences();
  layer.sentence.assign(n, 0);
  for (SentenceId s = 0; s < n; ++s)
    if (!f_.is_assumption(s)) layer.sentence[s] = solver_.new_var();
  layer.rule.reserve(f_.num_rules());
  for (std::size_t r = 0; r < f_.num_rules(); ++r) layer.rule.push_back(solver_.new_var());
  auto lit = [&](SentenceId s) { return second ? supported(s) : derived(s); };
  for (const auto& r : f_.rules()) {
    const Lit body = Lit::pos(layer.rule[r.id]);
    std::vector<Lit> all{body};
    for (SentenceId b : r.body) {
      add({~body, lit(b)});
      all.push_back(~lit(b));
    }
    add(std::move(all));
    add({~body, Lit::pos(layer.sentence[r.head])});
  }
  for (SentenceId s = 0; s < n; ++s) {
    if (f_.is_assumption(s)) continue;
    std::vector<Lit> some{Lit::neg(layer.sentence[s])};
    for (RuleId r : f_.rules_with_head(s)) some.push_back(Lit::pos(layer.rule[r]));
    add(std::move(some));
  }
}

Lit ClauseSearch::conflict_free_switch() {
  if (cf_switch_) return *cf_switch_;
  ensure_derived();
  const Lit on = Lit::pos(solver_.new_var());
  for (AssumptionId a = 0; a < f_.num_assumptions(); ++a) add({~on, ~in(a), ~derived(f_.contrary(a))});
  cf_switch_ = on;
  return on;
}

// In exactly when the contrary is not supported, on top of conflict-freeness.
Lit ClauseSearch::complete_switch() {
  if (complete_switch_) return *complete_switch_;
  ensure_supported();
  const Lit on = Lit::pos(solver_.new_var());
  const Lit cf = conflict_free_switch();
  add({~on, cf});
  for (AssumptionId a = 0; a < f_.num_assumptions(); ++a) {
    const Lit attacked = supported(f_.contrary(a));
    add({~on, ~in(a), ~attacked});
    add({~on, in(a), attacked});
  }
  complete_switch_ = on;
  return on;
}

void ClauseSearch::add_exclusion(const Exclusion& e) {
  std::vector<Lit> clause;
  for (AssumptionId a = 0; a < f_.num_assumptions(); ++a) {
    if (!pool_.test(a)) continue;
    if (!e.witness.test(a)) {
      clause.push_back(in(a));
    } else if (e.kind == ExclusionKind::kExactly) {
      clause.push_back(~in(a));
    }
  }
  add(std::move(clause));
}

AssumptionSet ClauseSearch::model_in_set() const {
  AssumptionSet a = f_.no_assumptions();
  for (AssumptionId i = 0; i < f_.num_assumptions(); ++i)
    if (solver_.value(in_[i])) a.insert(i);
  return a;
}

// Sentences the model claims but `truth` lacks form an unfounded set. Its
// bottom components, taking only rules whose bodies the model satisfies as
// edges, have no rule body the model satisfies from outside, so their loop
// clauses are violated: some member holds only if a rule entering the
// component from outside fires.
bool ClauseSearch::cut_unfounded(const Layer& layer, const SentenceSet& truth) {
  const std::size_t n = f_.num_sentences();
  SentenceSet unfounded = f_.no_sentences();
  for (SentenceId s = 0; s < n; ++s)
    if (!f_.is_assumption(s) && !truth.test(s) && solver_.value(layer.sentence[s])) unfounded.insert(s);
  if (unfounded.empty()) return false;

  std::vector<std::vector<SentenceId>> succ(n);
  unfounded.for_each([&](std::size_t s) {
    for (RuleId r : f_.rules_with_head(static_cast<SentenceId>(s))) {
      if (!solver_.value(layer.rule[r])) continue;
      for (SentenceId b : f_.rules()[r].body)
        if (unfounded.test(b)) succ[s].push_back(b);
    }
  });

  // Iterative Tarjan; components come out dependencies first.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<SentenceId> stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::vector<SentenceId>> comps;
  int counter = 0;
  unfounded.for_each([&](std::size_t root) {
    if (index[root] >= 0) return;
    std::vector<std::pair<SentenceId, std::size_t>> frames{{static_cast<SentenceId>(root), 0}};
    index[root] = low[root] = counter++;
    stack.push_back(static_cast<SentenceId>(root));
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < succ[v].size()) {
        const SentenceId w = succ[v][next++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const SentenceId done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] != index[done]) continue;
      comps.emplace_back();
      SentenceId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = static_cast<int>(comps.size() - 1);
        comps.back().push_back(w);
      } while (w != done);
    }
  });

  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& members = comps[c];
    const bool bottom = std::all_of(members.begin(), members.end(), [&](SentenceId s) {
      return std::all_of(succ[s].begin(), succ[s].end(), [&](SentenceId b) { return comp[b] == static_cast<int>(c); });
    });
    if (!bottom) continue;
    std::vector<Lit> entering;
    for (SentenceId s : members) {
      for (RuleId r : f_.rules_with_head(s)) {
        const auto& body = f_.rules()[r].body;
        if (std::none_of(body.begin(), body.end(), [&](SentenceId b) { return comp[b] == static_cast<int>(c); }))
          entering.push_back(Lit::pos(layer.rule[r]));
      }
    }
    if (members.size() == 1) {
      entering.push_back(Lit::neg(layer.sentence[members[0]]));
      add(std::move(entering));
      continue;
    }
    const Lit supported_from_outside = Lit::pos(solver_.new_var());
    for (SentenceId s : members) add({Lit::neg(layer.sentence[s]), supported_from_outside});
    entering.push_back(~supported_from_outside);
    add(std::move(entering));
  }
  return true;
}

bool ClauseSearch::solve_founded(const std::vector<Lit>& assumptions) {
  for (;;) {
    if (!solver_.solve(assumptions)) return false;
    if (!derived_) return true;
    const AssumptionSet a = model_in_set();
    d_.closure_into(a, scratch_);
    if (cut_unfounded(*derived_, scratch_)) continue;
    if (!supported_) return true;
    d_.closure_into(d_.defeated_by(scratch_).complement(), scratch_);
    if (cut_unfounded(*supported_, scratch_)) continue;
    return true;
  }
}

std::optional<AssumptionSet> ClauseSearch::solve(const AssumptionSet& floor, std::span<const Condition> extra) {
  std::vector<Lit> assumptions;
  floor.for_each([&](std::size_t a) { assumptions.push_back(in(static_cast<AssumptionId>(a))); });
  for (const auto& c : extra) {
    switch (c.kind) {
      case ConditionKind::kConflictFree: assumptions.push_back(conflict_free_switch()); break;
      case ConditionKind::kCompleteFixpoint: assumptions.push_back(complete_switch()); break;
      case ConditionKind::kRequireDerives:
        ensure_derived();
        assumptions.push_back(derived(c.sentence));
        break;
      case ConditionKind::kForbidDerives:
        ensure_derived();
        assumptions.push_back(~derived(c.sentence));
        break;
      default: break;
    }
  }
  if (!solve_founded(assumptions)) return std::nullopt;
  return model_in_set();
}

}  // namespace cegaraba
