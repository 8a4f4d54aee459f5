#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cegaraba/index_set.hpp"

namespace cegaraba {

using SentenceId = std::uint32_t;
using AssumptionId = std::uint32_t;
using RuleId = std::uint32_t;

struct Rule {
  RuleId id = 0;
  SentenceId head = 0;
  std::vector<SentenceId> body;  // ascending, distinct
};

/// A declared preference: `weaker <= stronger`.
struct PrefPair {
  AssumptionId stronger = 0;
  AssumptionId weaker = 0;
  friend auto operator<=>(const PrefPair&, const PrefPair&) = default;
};

/// Transitively closed preorder over assumptions together with its strict part.
class PrefRelation {
 public:
  PrefRelation() = default;
  explicit PrefRelation(std::size_t num_assumptions);

  std::size_t num_assumptions() const { return leq_.size(); }
  bool leq(AssumptionId x, AssumptionId y) const { return leq_[x].test(y); }
  bool strict(AssumptionId x, AssumptionId y) const { return below_[y].test(x); }
  /// {a : a < t}
  const AssumptionSet& strictly_below(AssumptionId t) const { return below_[t]; }
  /// {x : t < x}
  const AssumptionSet& strictly_above(AssumptionId t) const { return above_[t]; }
  /// True iff the strict part is empty.
  bool empty() const { return empty_; }

  friend bool operator==(const PrefRelation&, const PrefRelation&) = default;

 private:
  friend PrefRelation pref_close(std::size_t, std::span<const PrefPair>);

  std::vector<AssumptionSet> leq_;  // leq_[x] = {y : x <= y}
  std::vector<AssumptionSet> below_;
  std::vector<AssumptionSet> above_;
  bool empty_ = true;
};

/// Closes declared pairs under transitivity and derives the strict relation.
/// Throws std::out_of_range when a pair names an index >= num_assumptions.
PrefRelation pref_close(std::size_t num_assumptions, std::span<const PrefPair> declared);

enum class ViolationKind {
  kMalformed,
  kDuplicateDeclaration,
  kUndeclaredName,
  kMissingContrary,
  kNotFlat,
  kNonAssumptionPreference,
};

struct Violation {
  ViolationKind kind;
  std::string message;
  int line = 0;  // 0 when not tied to an input line
};

std::string to_string(ViolationKind kind);

class FrameworkError : public std::runtime_error {
 public:
  explicit FrameworkError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Name-level description of a framework as read from input, before interning.
/// May violate any framework invariant; see validate().
struct RawFramework {
  struct Named {
    std::string name;
    int line = 0;
  };
  struct Contrary {
    std::string assumption;
    std::string sentence;
    int line = 0;
  };
  struct RawRule {
    std::string head;
    std::vector<std::string> body;
    int line = 0;
  };
  struct RawPref {
    std::string stronger;
    std::string weaker;
    int line = 0;
  };

  std::vector<Named> assumptions;
  std::vector<Contrary> contraries;
  std::vector<RawRule> rules;
  std::vector<RawPref> prefs;
};

/// Every invariant violation of `raw`; empty means the framework is well formed.
std::vector<Violation> validate(const RawFramework& raw);

/// Validated, immutable ABA+ framework. Sentence ids follow the sorted order
/// of names, assumption ids the sorted order of assumption names, and rules
/// are de-duplicated and sorted by (head, body).
class Framework {
 public:
  /// Throws FrameworkError if validate(raw) reports anything.
  static Framework build(const RawFramework& raw, std::vector<std::string>* warnings = nullptr);

  std::size_t num_sentences() const { return names_.size(); }
  std::size_t num_assumptions() const { return assumption_sentence_.size(); }
  std::size_t num_rules() const { return rules_.size(); }

  const std::string& name(SentenceId s) const { return names_[s]; }
  const std::string& assumption_name(AssumptionId a) const { return names_[assumption_sentence_[a]]; }
  std::optional<SentenceId> find(std::string_view name) const;

  bool is_assumption(SentenceId s) const { return assumption_of_[s] >= 0; }
  std::optional<AssumptionId> assumption_of(SentenceId s) const;
  SentenceId sentence_of(AssumptionId a) const { return assumption_sentence_[a]; }
  SentenceId contrary(AssumptionId a) const { return contrary_[a]; }

  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<RuleId>& rules_with_head(SentenceId s) const { return by_head_[s]; }
  /// Rules whose body contains `s` (each rule listed once).
  const std::vector<RuleId>& rules_with_body(SentenceId s) const { return by_body_[s]; }
  const std::vector<RuleId>& fact_rules() const { return facts_; }

  const PrefRelation& prefs() const { return prefs_; }
  const std::vector<PrefPair>& declared_prefs() const { return declared_; }
  bool has_preferences() const { return !prefs_.empty(); }

  /// Same framework with the preference relation dropped (plain ABA).
  Framework without_preferences() const;

  AssumptionSet no_assumptions() const { return AssumptionSet(num_assumptions()); }
  AssumptionSet all_assumptions() const { return AssumptionSet::full(num_assumptions()); }
  SentenceSet no_sentences() const { return SentenceSet(num_sentences()); }

  AssumptionSet assumptions_from_names(std::span<const std::string> names) const;
  /// Sorted member names, space separated.
  std::string format(const AssumptionSet& set) const;

  friend bool operator==(const Framework& a, const Framework& b) {
    return a.names_ == b.names_ && a.assumption_sentence_ == b.assumption_sentence_ &&
           a.contrary_ == b.contrary_ && a.rule_keys() == b.rule_keys() &&
           a.declared_ == b.declared_ && a.prefs_ == b.prefs_;
  }

 private:
  std::vector<std::pair<SentenceId, std::vector<SentenceId>>> rule_keys() const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, SentenceId> ids_;
  std::vector<int> assumption_of_;  // -1 when not an assumption
  std::vector<SentenceId> assumption_sentence_;
  std::vector<SentenceId> contrary_;
  std::vector<Rule> rules_;
  std::vector<std::vector<RuleId>> by_head_;
  std::vector<std::vector<RuleId>> by_body_;
  std::vector<RuleId> facts_;
  std::vector<PrefPair> declared_;
  PrefRelation prefs_;
};

/// Reads the line-oriented framework format:
///   a <name>            assumption
///   c <asm> <sentence>  contrary
///   r <head> <body...>  rule
///   p <x> <y>           y <= x
/// `#` starts a comment. Throws FrameworkError carrying line numbers.
RawFramework parse_raw(std::string_view text);
Framework parse_framework(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Deterministic text in the same format: assumptions, contraries, rules,
/// preferences, each block sorted by name.
std::string serialize(const Framework& f);

/// The unique contrary of assumption `name`; throws std::invalid_argument if
/// `name` is not an assumption of `f`.
SentenceId contrary_of(const Framework& f, std::string_view name);

}  // namespace cegaraba
