#include "cegaraba/sat.hpp"

#include <algorithm>
#include <cassert>

namespace cegaraba::sat {

namespace {

// Luby restart sequence: 1 1 2 1 1 2 4 ...
double luby(double y, int x) {
  int size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x %= size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

constexpr double kVarDecay = 0.95;
constexpr double kClauseDecay = 0.999;
constexpr int kRestartBase = 100;

}  // namespace

Var Solver::new_var() {
  const Var v = static_cast<Var>(assigns_.size());
  assigns_.push_back(0);
  levels_.push_back(0);
  reasons_.push_back(-1);
  phase_.push_back(1);  // prefer false
  activity_.push_back(0);
  seen_.push_back(0);
  model_.push_back(0);
  heap_pos_.push_back(-1);
  watches_.emplace_back();
  watches_.emplace_back();
  heap_insert(v);
  return v;
}

bool Solver::add_clause(std::vector<Lit> lits) {
  if (!ok_) return false;
  assert(level() == 0);
  std::sort(lits.begin(), lits.end(), [](Lit a, Lit b) { return a.x < b.x; });
  std::vector<Lit> kept;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    const Lit l = lits[i];
    if (lit_value(l) > 0) return true;
    if (i + 1 < lits.size() && lits[i + 1] == ~l) return true;
    if (lit_value(l) < 0 || (!kept.empty() && kept.back() == l)) continue;
    kept.push_back(l);
  }
  if (kept.empty()) return ok_ = false;
  if (kept.size() == 1) {
    enqueue(kept[0], -1);
    if (propagate() >= 0) ok_ = false;
    return ok_;
  }
  clauses_.push_back({std::move(kept), 0, false, false});
  attach(static_cast<std::uint32_t>(clauses_.size() - 1));
  return true;
}

void Solver::attach(std::uint32_t cref) {
  const Clause& c = clauses_[cref];
  watches_[(~c.lits[0]).x].push_back({cref, c.lits[1]});
  watches_[(~c.lits[1]).x].push_back({cref, c.lits[0]});
}

void Solver::enqueue(Lit l, std::int64_t reason) {
  const Var v = l.var();
  assigns_[v] = l.negated() ? -1 : 1;
  levels_[v] = level();
  reasons_[v] = reason;
  trail_.push_back(l);
}

// Returns the index of a conflicting clause, or -1.
std::int64_t Solver::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    std::vector<Watcher>& ws = watches_[p.x];
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ws.size()) {
      const Watcher w = ws[i];
      if (lit_value(w.blocker) > 0) {
        ws[j++] = ws[i++];
        continue;
      }
      Clause& c = clauses_[w.clause];
      if (c.deleted) {
        ++i;
        continue;
      }
      const Lit false_lit = ~p;
      if (c.lits[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
      ++i;
      const Lit first = c.lits[0];
      if (first != w.blocker && lit_value(first) > 0) {
        ws[j++] = {w.clause, first};
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.lits.size(); ++k) {
        if (lit_value(c.lits[k]) >= 0) {
          std::swap(c.lits[1], c.lits[k]);
          watches_[(~c.lits[1]).x].push_back({w.clause, first});
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = {w.clause, first};
      if (lit_value(first) < 0) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        qhead_ = trail_.size();
        return w.clause;
      }
      enqueue(first, w.clause);
    }
    ws.resize(j);
  }
  return -1;
}

void Solver::analyze(std::uint32_t confl, std::vector<Lit>& learnt, int& back_level) {
  learnt.clear();
  learnt.push_back({});  // asserting literal goes here
  int pending = 0;
  Lit p{};
  bool have_p = false;
  std::size_t index = trail_.size();
  std::int64_t reason = confl;
  do {
    Clause& c = clauses_[static_cast<std::size_t>(reason)];
    if (c.learnt) bump_clause(c);
    for (std::size_t k = have_p ? 1 : 0; k < c.lits.size(); ++k) {
      const Lit q = c.lits[k];
      const Var v = q.var();
      if (seen_[v] || levels_[v] == 0) continue;
      bump_var(v);
      seen_[v] = 1;
      if (levels_[v] >= level()) {
        ++pending;
      } else {
        learnt.push_back(q);
      }
    }
    while (!seen_[trail_[--index].var()]) {
    }
    p = trail_[index];
    have_p = true;
    reason = reasons_[p.var()];
    seen_[p.var()] = 0;
    --pending;
    // Reason clauses keep their implied literal first.
    if (pending > 0) assert(reason >= 0 && clauses_[static_cast<std::size_t>(reason)].lits[0] == p);
  } while (pending > 0);
  learnt[0] = ~p;

  // Drop literals implied by the rest of the clause.
  std::uint32_t abstract_levels = 0;
  for (std::size_t k = 1; k < learnt.size(); ++k) abstract_levels |= 1U << (levels_[learnt[k].var()] & 31);
  analyze_clear_.assign(learnt.begin(), learnt.end());
  std::size_t j = 1;
  for (std::size_t k = 1; k < learnt.size(); ++k) {
    if (reasons_[learnt[k].var()] < 0 || !redundant(learnt[k], abstract_levels)) learnt[j++] = learnt[k];
  }
  learnt.resize(j);
  for (Lit l : analyze_clear_) seen_[l.var()] = 0;

  if (learnt.size() == 1) {
    back_level = 0;
  } else {
    std::size_t max_i = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k)
      if (levels_[learnt[k].var()] > levels_[learnt[max_i].var()]) max_i = k;
    std::swap(learnt[1], learnt[max_i]);
    back_level = levels_[learnt[1].var()];
  }
}

bool Solver::redundant(Lit l, std::uint32_t abstract_levels) {
  analyze_stack_.clear();
  analyze_stack_.push_back(l);
  const std::size_t top = analyze_clear_.size();
  while (!analyze_stack_.empty()) {
    const Lit q = analyze_stack_.back();
    analyze_stack_.pop_back();
    const Clause& c = clauses_[static_cast<std::size_t>(reasons_[q.var()])];
    for (std::size_t k = 1; k < c.lits.size(); ++k) {
      const Lit r = c.lits[k];
      const Var v = r.var();
      if (seen_[v] || levels_[v] == 0) continue;
      if (reasons_[v] >= 0 && (abstract_levels & (1U << (levels_[v] & 31)))) {
        seen_[v] = 1;
        analyze_stack_.push_back(r);
        analyze_clear_.push_back(r);
      } else {
        for (std::size_t i = top; i < analyze_clear_.size(); ++i) seen_[analyze_clear_[i].var()] = 0;
        analyze_clear_.resize(top);
        return false;
      }
    }
  }
  return true;
}

void Solver::cancel_until(int lvl) {
  if (level() <= lvl) return;
  for (std::size_t i = trail_.size(); i-- > static_cast<std::size_t>(trail_lim_[lvl]);) {
    const Var v = trail_[i].var();
    phase_[v] = trail_[i].negated();
    assigns_[v] = 0;
    reasons_[v] = -1;
    if (heap_pos_[v] < 0) heap_insert(v);
  }
  trail_.resize(static_cast<std::size_t>(trail_lim_[lvl]));
  trail_lim_.resize(static_cast<std::size_t>(lvl));
  qhead_ = trail_.size();
}

Lit Solver::pick_branch() {
  while (!heap_.empty()) {
    const Var v = heap_pop();
    if (assigns_[v] == 0) return phase_[v] ? Lit::neg(v) : Lit::pos(v);
  }
  return Lit{~0U};
}

void Solver::bump_var(Var v) {
  activity_[v] += var_inc_;
  if (activity_[v] > 1e100) {
    for (double& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  if (heap_pos_[v] >= 0) heap_up(static_cast<std::size_t>(heap_pos_[v]));
}

void Solver::bump_clause(Clause& c) {
  c.activity += clause_inc_;
  if (c.activity > 1e20) {
    for (Clause& d : clauses_)
      if (d.learnt) d.activity *= 1e-20;
    clause_inc_ *= 1e-20;
  }
}

void Solver::reduce_db() {
  std::vector<std::uint32_t> learnts;
  for (std::uint32_t i = 0; i < clauses_.size(); ++i)
    if (clauses_[i].learnt && !clauses_[i].deleted && clauses_[i].lits.size() > 2) learnts.push_back(i);
  std::stable_sort(learnts.begin(), learnts.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return clauses_[a].activity < clauses_[b].activity; });
  auto locked = [&](std::uint32_t cref) {
    const Lit first = clauses_[cref].lits[0];
    return lit_value(first) > 0 && reasons_[first.var()] == static_cast<std::int64_t>(cref);
  };
  for (std::size_t i = 0; i < learnts.size() / 2; ++i) {
    if (locked(learnts[i])) continue;
    clauses_[learnts[i]].deleted = true;
    clauses_[learnts[i]].lits.shrink_to_fit();
    --num_learnts_;
  }
}

bool Solver::solve(std::span<const Lit> assumptions) {
  if (!ok_) return false;
  cancel_until(0);
  if (max_learnts_ == 0) max_learnts_ = std::max<double>(static_cast<double>(clauses_.size()) / 3.0, 2000.0);
  std::vector<Lit> learnt;
  int restarts = 0;
  for (;;) {
    const double budget = luby(2, restarts++) * kRestartBase;
    int conflicts_here = 0;
    for (;;) {
      const std::int64_t confl = propagate();
      if (confl >= 0) {
        ++conflicts_;
        ++conflicts_here;
        if (level() == 0) {
          ok_ = false;
          return false;
        }
        int back_level = 0;
        analyze(static_cast<std::uint32_t>(confl), learnt, back_level);
        cancel_until(back_level);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          clauses_.push_back({learnt, 0, true, false});
          const auto cref = static_cast<std::uint32_t>(clauses_.size() - 1);
          attach(cref);
          bump_clause(clauses_[cref]);
          ++num_learnts_;
          enqueue(learnt[0], cref);
        }
        var_inc_ /= kVarDecay;
        clause_inc_ /= kClauseDecay;
        continue;
      }
      if (conflicts_here >= budget) {
        cancel_until(0);
        break;
      }
      if (static_cast<double>(num_learnts_) >= max_learnts_ + static_cast<double>(trail_.size())) {
        reduce_db();
        max_learnts_ *= 1.1;
      }
      Lit next{~0U};
      while (static_cast<std::size_t>(level()) < assumptions.size()) {
        const Lit a = assumptions[static_cast<std::size_t>(level())];
        if (lit_value(a) > 0) {
          trail_lim_.push_back(static_cast<int>(trail_.size()));
        } else if (lit_value(a) < 0) {
          cancel_until(0);
          return false;
        } else {
          next = a;
          break;
        }
      }
      if (next.x == ~0U) {
        next = pick_branch();
        if (next.x == ~0U) {
          for (Var v = 0; v < assigns_.size(); ++v) model_[v] = assigns_[v] > 0;
          cancel_until(0);
          return true;
        }
        ++decisions_;
      }
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      enqueue(next, -1);
    }
  }
}

bool Solver::heap_less(Var a, Var b) const {
  if (activity_[a] != activity_[b]) return activity_[a] > activity_[b];
  return a < b;
}

void Solver::heap_insert(Var v) {
  heap_pos_[v] = static_cast<int>(heap_.size());
  heap_.push_back(v);
  heap_up(heap_.size() - 1);
}

void Solver::heap_up(std::size_t i) {
  const Var v = heap_[i];
  while (i > 0) {
    const std::size_t parent = (i - 1) / 2;
    if (!heap_less(v, heap_[parent])) break;
    heap_[i] = heap_[parent];
    heap_pos_[heap_[i]] = static_cast<int>(i);
    i = parent;
  }
  heap_[i] = v;
  heap_pos_[v] = static_cast<int>(i);
}

void Solver::heap_down(std::size_t i) {
  const Var v = heap_[i];
  for (;;) {
    std::size_t child = 2 * i + 1;
    if (child >= heap_.size()) break;
    if (child + 1 < heap_.size() && heap_less(heap_[child + 1], heap_[child])) ++child;
    if (!heap_less(heap_[child], v)) break;
    heap_[i] = heap_[child];
    heap_pos_[heap_[i]] = static_cast<int>(i);
    i = child;
  }
  heap_[i] = v;
  heap_pos_[v] = static_cast<int>(i);
}

Var Solver::heap_pop() {
  const Var top = heap_[0];
  heap_pos_[top] = -1;
  const Var last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_pos_[last] = 0;
    heap_down(0);
  }
  return top;
}

}  // namespace cegaraba::sat
