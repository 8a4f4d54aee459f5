#include "cegaraba/derivation.hpp"

#include <algorithm>

namespace cegaraba {

ReachRelation::ReachRelation(std::size_t num_assumptions, std::size_t num_sentences)
    : rows_(num_assumptions, SentenceSet(num_sentences)) {}

std::vector<std::pair<AssumptionId, SentenceId>> ReachRelation::pairs() const {
  std::vector<std::pair<AssumptionId, SentenceId>> out;
  for (AssumptionId z = 0; z < rows_.size(); ++z)
    rows_[z].for_each([&](std::size_t s) { out.emplace_back(z, static_cast<SentenceId>(s)); });
  return out;
}

bool ReachRelation::empty() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SentenceSet& s) { return s.empty(); });
}

Deriver::Deriver(const Framework& f)
    : f_(&f),
      body_size_(f.num_rules()),
      remaining_(f.num_rules()),
      fired_(f.num_rules(), 0),
      singleton_(f.num_assumptions()),
      reverse_witness_(f.num_assumptions()),
      singleton_ready_(f.num_assumptions(), 0) {
  for (const auto& r : f.rules()) body_size_[r.id] = static_cast<std::uint32_t>(r.body.size());
  stack_.reserve(f.num_sentences());
}

void Deriver::run(const AssumptionSet& x, SentenceSet& out, std::vector<char>* fired) {
  if (out.universe() != f_->num_sentences()) {
    out = SentenceSet(f_->num_sentences());
  } else {
    out.clear();
  }
  std::copy(body_size_.begin(), body_size_.end(), remaining_.begin());
  if (fired) std::fill(fired->begin(), fired->end(), 0);
  stack_.clear();

  auto derive = [&](SentenceId s) {
    if (!out.test(s)) {
      out.insert(s);
      stack_.push_back(s);
    }
  };
  x.for_each([&](std::size_t a) { derive(f_->sentence_of(static_cast<AssumptionId>(a))); });
  for (RuleId r : f_->fact_rules()) {
    if (fired) (*fired)[r] = 1;
    derive(f_->rules()[r].head);
  }
  while (!stack_.empty()) {
    const SentenceId s = stack_.back();
    stack_.pop_back();
    for (RuleId r : f_->rules_with_body(s)) {
      if (--remaining_[r] == 0) {
        if (fired) (*fired)[r] = 1;
        derive(f_->rules()[r].head);
      }
    }
  }
}

SentenceSet Deriver::closure(const AssumptionSet& x) {
  SentenceSet out;
  run(x, out, nullptr);
  return out;
}

void Deriver::closure_into(const AssumptionSet& x, SentenceSet& out) { run(x, out, nullptr); }

SentenceSet Deriver::pref_closure(const AssumptionSet& a, AssumptionId t) {
  return closure(a - f_->prefs().strictly_below(t));
}

const SentenceSet& Deriver::singleton_closure(AssumptionId t) {
  if (!singleton_ready_[t]) {
    AssumptionSet one = f_->no_assumptions();
    one.insert(t);
    singleton_[t] = closure(one);
    reverse_witness_[t] = f_->no_assumptions();
    f_->prefs().strictly_above(t).for_each([&](std::size_t x) {
      if (contrary_in(static_cast<AssumptionId>(x), singleton_[t])) reverse_witness_[t].insert(x);
    });
    singleton_ready_[t] = 1;
  }
  return singleton_[t];
}

const AssumptionSet& Deriver::reverse_witnesses(AssumptionId t) {
  singleton_closure(t);
  return reverse_witness_[t];
}

ReachRelation Deriver::triggered_reach(const AssumptionSet& x) {
  ReachRelation rel(f_->num_assumptions(), f_->num_sentences());
  SentenceSet derived;
  run(x, derived, &fired_);
  std::vector<SentenceId> queue;
  x.for_each([&](std::size_t z) {
    SentenceSet& row = rel.rows_[z];
    queue.assign(1, f_->sentence_of(static_cast<AssumptionId>(z)));
    row.insert(queue.front());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (RuleId r : f_->rules_with_body(queue[i])) {
        if (!fired_[r]) continue;
        const SentenceId h = f_->rules()[r].head;
        if (!row.test(h)) {
          row.insert(h);
          queue.push_back(h);
        }
      }
    }
  });
  return rel;
}

AttackKind Deriver::attacks_singleton(const AssumptionSet& a, AssumptionId t) {
  const bool normal = contrary_in(t, pref_closure(a, t));
  const bool reverse = reverse_witnesses(t).intersects(a);
  if (normal && reverse) return AttackKind::kBoth;
  if (normal) return AttackKind::kNormal;
  if (reverse) return AttackKind::kReverse;
  return AttackKind::kNone;
}

AssumptionSet Deriver::undefeated(const AssumptionSet& a) {
  const auto& prefs = f_->prefs();
  const std::size_t m = f_->num_assumptions();
  AssumptionSet out = f_->no_assumptions();
  SentenceSet full;
  run(a, full, nullptr);
  memo_.clear();
  for (AssumptionId u = 0; u < m; ++u) {
    if (reverse_witnesses(u).intersects(a)) continue;
    const SentenceSet* derived = &full;
    if (prefs.strictly_below(u).intersects(a)) {
      AssumptionSet filtered = a - prefs.strictly_below(u);
      auto it = memo_.find(filtered);
      if (it == memo_.end()) it = memo_.emplace(filtered, closure(filtered)).first;
      derived = &it->second;
    }
    if (!contrary_in(u, *derived)) out.insert(u);
  }
  return out;
}

bool Deriver::normally_attacks(const AssumptionSet& a, const AssumptionSet& b) {
  const auto& prefs = f_->prefs();
  SentenceSet full;
  run(a, full, nullptr);
  memo_.clear();
  bool hit = false;
  b.for_each([&](std::size_t y) {
    if (hit) return;
    const auto t = static_cast<AssumptionId>(y);
    if (!prefs.strictly_below(t).intersects(a)) {
      hit = contrary_in(t, full);
      return;
    }
    AssumptionSet filtered = a - prefs.strictly_below(t);
    auto it = memo_.find(filtered);
    if (it == memo_.end()) it = memo_.emplace(filtered, closure(filtered)).first;
    hit = contrary_in(t, it->second);
  });
  return hit;
}

bool Deriver::reversely_attacks(const AssumptionSet& a, const AssumptionSet& b) {
  const auto& prefs = f_->prefs();
  // Only members of A with a strictly weaker member of B can be reversely attacked.
  bool candidate = false;
  a.for_each([&](std::size_t x) {
    candidate = candidate || prefs.strictly_below(static_cast<AssumptionId>(x)).intersects(b);
  });
  if (!candidate) return false;

  SentenceSet derived;
  run(b, derived, &fired_);
  std::vector<SentenceId> queue;
  SentenceSet seen(f_->num_sentences());
  bool hit = false;
  a.for_each([&](std::size_t xi) {
    if (hit) return;
    const auto x = static_cast<AssumptionId>(xi);
    const SentenceId target = f_->contrary(x);
    if (!derived.test(target)) return;
    const AssumptionSet weaker = b & prefs.strictly_below(x);
    if (weaker.empty()) return;
    // Walk triggered rules backwards from the contrary; any weaker member of
    // B met on the way is a leaf of some derivation tree for it.
    seen.clear();
    queue.assign(1, target);
    seen.insert(target);
    for (std::size_t i = 0; i < queue.size() && !hit; ++i) {
      const SentenceId s = queue[i];
      if (auto as = f_->assumption_of(s); as && weaker.test(*as)) {
        hit = true;
        break;
      }
      for (RuleId r : f_->rules_with_head(s)) {
        if (!fired_[r]) continue;
        for (SentenceId c : f_->rules()[r].body) {
          if (!seen.test(c)) {
            seen.insert(c);
            queue.push_back(c);
          }
        }
      }
    }
  });
  return hit;
}

bool Deriver::set_attacks(const AssumptionSet& a, const AssumptionSet& b) {
  return normally_attacks(a, b) || reversely_attacks(a, b);
}

AssumptionSet Deriver::defeated_by(const SentenceSet& derived) const {
  AssumptionSet out = f_->no_assumptions();
  for (AssumptionId x = 0; x < f_->num_assumptions(); ++x)
    if (contrary_in(x, derived)) out.insert(x);
  return out;
}

bool Deriver::conflict_free(const AssumptionSet& a) {
  SentenceSet derived;
  run(a, derived, nullptr);
  bool ok = true;
  a.for_each([&](std::size_t x) { ok = ok && !contrary_in(static_cast<AssumptionId>(x), derived); });
  return ok;
}

SentenceSet closure(const Framework& f, const AssumptionSet& x) { return Deriver(f).closure(x); }

SentenceSet pref_closure(const Framework& f, const AssumptionSet& a, AssumptionId t) {
  return Deriver(f).pref_closure(a, t);
}

ReachRelation triggered_reach(const Framework& f, const AssumptionSet& x) { return Deriver(f).triggered_reach(x); }

AttackKind attacks_singleton_plus(const Framework& f, const AssumptionSet& a, AssumptionId t) {
  return Deriver(f).attacks_singleton(a, t);
}

AssumptionSet undefeated_set(const Framework& f, const AssumptionSet& a) { return Deriver(f).undefeated(a); }

bool set_attacks_plus(const Framework& f, const AssumptionSet& a, const AssumptionSet& b) {
  return Deriver(f).set_attacks(a, b);
}

}  // namespace cegaraba
