#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cegaraba::sat {

using Var = std::uint32_t;

/// Literal: variable times two, plus one when negated.
struct Lit {
  std::uint32_t x = 0;

  static Lit pos(Var v) { return {v << 1}; }
  static Lit neg(Var v) { return {(v << 1) | 1U}; }
  Var var() const { return x >> 1; }
  bool negated() const { return x & 1U; }
  Lit operator~() const { return {x ^ 1U}; }
  friend bool operator==(Lit, Lit) = default;
};

/// Conflict-driven clause learning over a growing clause set. Clauses may be
/// added between calls; every call may pass its own assumption literals.
/// Fully deterministic: no randomness, fixed tie-breaking.
class Solver {
 public:
  Var new_var();
  std::size_t num_vars() const { return assigns_.size(); }

  /// Returns false once the clause set is unsatisfiable without assumptions.
  bool add_clause(std::vector<Lit> lits);

  /// True iff the clauses and assumptions are jointly satisfiable; the model
  /// is then available through value().
  bool solve(std::span<const Lit> assumptions = {});
  bool value(Var v) const { return model_[v]; }
  bool value(Lit l) const { return model_[l.var()] != l.negated(); }

  std::uint64_t conflicts() const { return conflicts_; }
  std::uint64_t decisions() const { return decisions_; }

 private:
  struct Clause {
    std::vector<Lit> lits;
    double activity = 0;
    bool learnt = false;
    bool deleted = false;
  };
  struct Watcher {
    std::uint32_t clause;
    Lit blocker;
  };

  // 1 true, -1 false, 0 unassigned.
  int lit_value(Lit l) const {
    const int v = assigns_[l.var()];
    return l.negated() ? -v : v;
  }
  int level() const { return static_cast<int>(trail_lim_.size()); }

  void attach(std::uint32_t cref);
  void enqueue(Lit l, std::int64_t reason);
  std::int64_t propagate();
  void analyze(std::uint32_t confl, std::vector<Lit>& learnt, int& back_level);
  bool redundant(Lit l, std::uint32_t abstract_levels);
  void cancel_until(int lvl);
  Lit pick_branch();
  void bump_var(Var v);
  void bump_clause(Clause& c);
  void reduce_db();

  void heap_insert(Var v);
  void heap_up(std::size_t i);
  void heap_down(std::size_t i);
  Var heap_pop();
  bool heap_less(Var a, Var b) const;

  std::vector<Clause> clauses_;
  std::vector<std::vector<Watcher>> watches_;
  std::vector<std::int8_t> assigns_;
  std::vector<int> levels_;
  std::vector<std::int64_t> reasons_;
  std::vector<char> phase_;
  std::vector<double> activity_;
  std::vector<char> seen_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<Var> heap_;
  std::vector<int> heap_pos_;
  std::vector<char> model_;
  std::vector<Lit> analyze_stack_;
  std::vector<Lit> analyze_clear_;
  double var_inc_ = 1.0;
  double clause_inc_ = 1.0;
  std::size_t num_learnts_ = 0;
  double max_learnts_ = 0;
  bool ok_ = true;
  std::uint64_t conflicts_ = 0;
  std::uint64_t decisions_ = 0;
};

}  // namespace cegaraba::sat
