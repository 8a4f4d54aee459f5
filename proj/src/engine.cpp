#include "cegaraba/engine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "clause_search.hpp"

namespace cegaraba {

namespace {

struct Active {
  bool conflict_free = false;
  bool complete = false;
  bool undefeated = false;
  bool prune = false;
  std::vector<SentenceId> require;
  std::vector<SentenceId> forbid;
  std::vector<const AssumptionSet*> attacks;
  std::vector<const AssumptionSet*> not_attacked_by;

  bool needs_conflict_free() const { return conflict_free || complete; }
};

void collect(Active& act, std::span<const Condition> conds) {
  for (const auto& c : conds) {
    switch (c.kind) {
      case ConditionKind::kConflictFree: act.conflict_free = true; break;
      case ConditionKind::kRequireDerives: act.require.push_back(c.sentence); break;
      case ConditionKind::kForbidDerives: act.forbid.push_back(c.sentence); break;
      case ConditionKind::kCompleteFixpoint: act.complete = true; break;
      case ConditionKind::kComputeUndefeated: act.undefeated = true; break;
      case ConditionKind::kPrune: act.prune = true; break;
      case ConditionKind::kAttacks: act.attacks.push_back(&c.set); break;
      case ConditionKind::kNotAttackedBy: act.not_attacked_by.push_back(&c.set); break;
    }
  }
}

std::string signature(const AssumptionSet& floor, std::span<const Condition> extra) {
  std::ostringstream os;
  for (auto w : floor.words()) os << w << ',';
  for (const auto& c : extra) {
    os << '|' << static_cast<int>(c.kind) << ':' << c.sentence << ':';
    for (auto w : c.set.words()) os << w << ',';
  }
  return os.str();
}

}  // namespace

void check_conditions(const Framework& f, std::span<const Condition> conditions) {
  std::vector<char> required(f.num_sentences(), 0);
  std::vector<char> forbidden(f.num_sentences(), 0);
  for (const auto& c : conditions) {
    switch (c.kind) {
      case ConditionKind::kRequireDerives:
      case ConditionKind::kForbidDerives: {
        if (c.sentence >= f.num_sentences()) throw std::invalid_argument("condition names an unknown sentence");
        auto& mine = c.kind == ConditionKind::kRequireDerives ? required : forbidden;
        auto& other = c.kind == ConditionKind::kRequireDerives ? forbidden : required;
        if (other[c.sentence])
          throw std::invalid_argument("sentence '" + f.name(c.sentence) + "' both required and forbidden");
        mine[c.sentence] = 1;
        break;
      }
      case ConditionKind::kAttacks:
      case ConditionKind::kNotAttackedBy:
        if (c.set.universe() != f.num_assumptions())
          throw std::invalid_argument("condition set has the wrong universe");
        break;
      default: break;
    }
  }
}

class Search {
 public:
  Search(Session& s, std::span<const Condition> extra, const AssumptionSet& floor)
      : s_(s), f_(*s.f_), d_(s.deriver_), floor_(floor) {
    collect(act_, s.base_);
    collect(act_, extra);
    s_.pool_.for_each([&](std::size_t a) { vars_.push_back(static_cast<AssumptionId>(a)); });
    in_ = f_.no_assumptions();
    out_ = s_.pool_.complement();
    forbidden_ = f_.no_assumptions();
    if (s_.opts_.propagate) {
      // Members individually attacked by a fixed attacker can never join.
      for (const auto* w : act_.not_attacked_by) {
        for (AssumptionId q = 0; q < f_.num_assumptions(); ++q) {
          AssumptionSet one = f_.no_assumptions();
          one.insert(q);
          if (d_.set_attacks(*w, one)) forbidden_.insert(q);
        }
      }
    }
  }

  std::optional<Model> run(Session::Cursor* cursor) {
    if (cursor && cursor->exhausted) return std::nullopt;
    cursor_ = cursor && !cursor->bits.empty() ? &cursor->bits : nullptr;
    path_.assign(vars_.size(), 0);
    if (dfs(0, cursor_ != nullptr)) {
      if (cursor) cursor->bits = path_;
      return std::move(result_);
    }
    if (cursor) cursor->exhausted = true;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t depth, bool tight) {
    ++s_.nodes_;
    if (s_.opts_.propagate && !partial_ok()) return false;
    if (depth == vars_.size()) return leaf();
    const AssumptionId v = vars_[depth];
    for (char val = 0; val <= 1; ++val) {
      if (tight && val < (*cursor_)[depth]) continue;
      if (val == 0 && floor_.test(v)) continue;
      path_[depth] = val;
      if (val) {
        in_.insert(v);
      } else {
        out_.insert(v);
      }
      if (dfs(depth + 1, tight && val == (*cursor_)[depth])) return true;
      in_.erase(v);
      out_.erase(v);
    }
    return false;
  }

  // Sound bounds only: `lower` is contained in, and `upper` contains, every
  // accepted completion of the current partial assignment. Both are tightened
  // until nothing changes.
  bool partial_ok() {
    AssumptionSet lower = in_ | floor_;
    AssumptionSet upper = out_.complement() - forbidden_;

    for (;;) {
      if (!lower.is_subset_of(upper)) return false;
      for (const auto& w : s_.subset_excl_)
        if (upper.is_subset_of(w)) return false;
      bool changed = false;

      d_.closure_into(lower, derived_);
      for (SentenceId s : act_.forbid)
        if (derived_.test(s)) return false;
      if (act_.needs_conflict_free()) {
        const AssumptionSet defeated = d_.defeated_by(derived_);
        if (defeated.intersects(lower)) return false;
        if (defeated.intersects(upper)) {
          upper -= defeated;
          changed = true;
        }
      }
      if (act_.complete) {
        // A complete set is a fixpoint of the monotone map A -> {a : a not
        // attacked by the closure of what A leaves undefeated}, so its image
        // of `lower` must be in and its image of `upper` bounds from above.
        d_.closure_into(d_.defeated_by(derived_).complement(), scratch_);
        const AssumptionSet unattacked = d_.defeated_by(scratch_).complement();
        if (!unattacked.is_subset_of(upper)) return false;
        if (!unattacked.is_subset_of(lower)) {
          lower |= unattacked;
          changed = true;
        }
        d_.closure_into(upper, scratch_);
        d_.closure_into(d_.defeated_by(scratch_).complement(), scratch_);
        const AssumptionSet attacked = d_.defeated_by(scratch_);
        if (attacked.intersects(lower)) return false;
        if (attacked.intersects(upper)) {
          upper -= attacked;
          changed = true;
        }
      }
      if (!changed && act_.prune) {
        const AssumptionSet u_hi = d_.undefeated(lower);
        const AssumptionSet u_lo = d_.undefeated(upper);
        const AssumptionSet must = (u_lo & d_.undefeated(u_hi)) - lower;
        if (!must.is_subset_of(upper)) return false;
        if (!must.empty()) {
          lower |= must;
          changed = true;
        }
      }
      if (!changed) break;
    }

    if (!act_.require.empty()) {
      d_.closure_into(upper, scratch_);
      for (SentenceId s : act_.require)
        if (!scratch_.test(s)) return false;
    }
    for (const auto* w : act_.attacks)
      if (!d_.set_attacks(upper, *w)) return false;
    for (const auto* w : act_.not_attacked_by)
      if (d_.set_attacks(*w, lower)) return false;
    if (lower == upper && s_.exact_excl_.count(lower)) return false;
    return true;
  }

  bool leaf() {
    const AssumptionSet& a = in_;
    if (!floor_.is_subset_of(a)) return false;
    for (const auto& w : s_.subset_excl_)
      if (a.is_subset_of(w)) return false;
    if (s_.exact_excl_.count(a)) return false;

    SentenceSet derived = d_.closure(a);
    if (act_.needs_conflict_free() && d_.defeated_by(derived).intersects(a)) return false;
    for (SentenceId s : act_.require)
      if (!derived.test(s)) return false;
    for (SentenceId s : act_.forbid)
      if (derived.test(s)) return false;
    if (act_.complete) {
      const SentenceSet v = d_.closure(d_.defeated_by(derived).complement());
      const AssumptionSet attacked = d_.defeated_by(v);
      if (attacked.intersects(a)) return false;
      if (!(a | attacked).complement().empty()) return false;
    }
    std::optional<AssumptionSet> undefeated;
    if (act_.undefeated || act_.prune) {
      undefeated = d_.undefeated(a);
      if (act_.prune && (*undefeated - a).intersects(d_.undefeated(*undefeated))) return false;
    }
    for (const auto* w : act_.attacks)
      if (!d_.set_attacks(a, *w)) return false;
    for (const auto* w : act_.not_attacked_by)
      if (d_.set_attacks(*w, a)) return false;
    result_ = Model{a, std::move(derived), std::move(undefeated)};
    return true;
  }

  Session& s_;
  const Framework& f_;
  Deriver& d_;
  const AssumptionSet& floor_;
  Active act_;
  std::vector<AssumptionId> vars_;
  AssumptionSet in_;
  AssumptionSet out_;
  AssumptionSet forbidden_;
  std::vector<char> path_;
  const std::vector<char>* cursor_ = nullptr;
  SentenceSet derived_;
  SentenceSet scratch_;
  std::optional<Model> result_;
};

Session::Session(const Framework& f, std::vector<Condition> base, SessionOptions opts)
    : Session(f, std::move(base), f.all_assumptions(), opts) {}

Session::Session(const Framework& f, std::vector<Condition> base, AssumptionSet pool, SessionOptions opts)
    : f_(&f), base_(std::move(base)), pool_(std::move(pool)), opts_(opts), deriver_(f) {
  if (pool_.universe() != f.num_assumptions()) throw std::invalid_argument("pool has the wrong universe");
  check_conditions(f, base_);
}

Session::Session(Session&&) noexcept = default;
Session& Session::operator=(Session&&) noexcept = default;
Session::~Session() = default;

void Session::add_exclusion(Exclusion e) {
  if (e.witness.universe() != f_->num_assumptions())
    throw std::invalid_argument("exclusion witness has the wrong universe");
  if (clauses_) clauses_->add_exclusion(e);
  if (e.kind == ExclusionKind::kSubsetOf) {
    subset_excl_.push_back(std::move(e.witness));
  } else {
    exact_excl_.insert(std::move(e.witness));
  }
}

std::optional<Model> Session::solve_by_clauses(const AssumptionSet& floor, std::span<const Condition> extra) {
  if (!clauses_) {
    clauses_ = std::make_unique<ClauseSearch>(*f_, deriver_, base_, pool_);
    for (const auto& w : subset_excl_) clauses_->add_exclusion(Exclusion::subset_of(w));
    for (const auto& w : exact_excl_) clauses_->add_exclusion(Exclusion::exactly(w));
  }
  const std::uint64_t before = clauses_->work();
  auto in = clauses_->solve(floor, extra);
  nodes_ += clauses_->work() - before;
  if (!in) return std::nullopt;
  Model m{*in, deriver_.closure(*in), std::nullopt};
  auto wants = [](const Condition& c) { return c.kind == ConditionKind::kComputeUndefeated; };
  if (std::any_of(base_.begin(), base_.end(), wants) || std::any_of(extra.begin(), extra.end(), wants))
    m.undefeated = deriver_.undefeated(*in);
  return m;
}

std::optional<Model> Session::solve() { return solve(f_->no_assumptions(), {}); }

std::optional<Model> Session::solve(const AssumptionSet& floor, std::span<const Condition> extra) {
  if (floor.universe() != f_->num_assumptions()) throw std::invalid_argument("floor has the wrong universe");
  std::vector<Condition> all = base_;
  all.insert(all.end(), extra.begin(), extra.end());
  check_conditions(*f_, all);
  ++calls_;
  if (opts_.strategy == Strategy::kAuto && ClauseSearch::supports(base_) && ClauseSearch::supports(extra))
    return solve_by_clauses(floor, extra);
  Search search(*this, extra, floor);
  return search.run(opts_.resume ? &cursors_[signature(floor, extra)] : nullptr);
}

}  // namespace cegaraba
