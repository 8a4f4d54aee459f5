#include "cegaraba/framework.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace cegaraba {

PrefRelation::PrefRelation(std::size_t num_assumptions)
    : leq_(num_assumptions, AssumptionSet(num_assumptions)),
      below_(num_assumptions, AssumptionSet(num_assumptions)),
      above_(num_assumptions, AssumptionSet(num_assumptions)) {}

PrefRelation pref_close(std::size_t num_assumptions, std::span<const PrefPair> declared) {
  PrefRelation rel(num_assumptions);
  for (std::size_t x = 0; x < num_assumptions; ++x) rel.leq_[x].insert(x);
  for (const auto& p : declared) {
    if (p.stronger >= num_assumptions || p.weaker >= num_assumptions)
      throw std::out_of_range("preference pair names a non-assumption");
    rel.leq_[p.weaker].insert(p.stronger);
  }
  // Warshall over bit rows: if x <= k then x inherits everything k reaches.
  for (std::size_t k = 0; k < num_assumptions; ++k) {
    for (std::size_t x = 0; x < num_assumptions; ++x) {
      if (rel.leq_[x].test(k)) rel.leq_[x] |= rel.leq_[k];
    }
  }
  for (std::size_t x = 0; x < num_assumptions; ++x) {
    rel.leq_[x].for_each([&](std::size_t y) {
      if (!rel.leq_[y].test(x)) {
        rel.below_[y].insert(x);
        rel.above_[x].insert(y);
        rel.empty_ = false;
      }
    });
  }
  return rel;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kMalformed: return "malformed";
    case ViolationKind::kDuplicateDeclaration: return "duplicate declaration";
    case ViolationKind::kUndeclaredName: return "undeclared name";
    case ViolationKind::kMissingContrary: return "missing contrary";
    case ViolationKind::kNotFlat: return "not flat";
    case ViolationKind::kNonAssumptionPreference: return "non-assumption preference";
  }
  return "unknown";
}

namespace {

std::string describe(const std::vector<Violation>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << "; ";
    if (vs[i].line > 0) os << "line " << vs[i].line << ": ";
    os << to_string(vs[i].kind) << ": " << vs[i].message;
  }
  return os.str();
}

bool valid_name(const std::string& s) {
  return !s.empty() && std::none_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

FrameworkError::FrameworkError(std::vector<Violation> violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate(const RawFramework& raw) {
  std::vector<Violation> out;
  auto report = [&](ViolationKind k, std::string msg, int line) {
    out.push_back({k, std::move(msg), line});
  };

  std::map<std::string, int> assumptions;
  for (const auto& a : raw.assumptions) {
    if (!valid_name(a.name)) {
      report(ViolationKind::kMalformed, "invalid name '" + a.name + "'", a.line);
      continue;
    }
    if (!assumptions.emplace(a.name, a.line).second)
      report(ViolationKind::kDuplicateDeclaration, "assumption '" + a.name + "' declared twice", a.line);
  }

  std::set<std::string> known;
  for (const auto& [n, line] : assumptions) known.insert(n);

  std::map<std::string, int> contrary_seen;
  for (const auto& c : raw.contraries) {
    if (!valid_name(c.assumption) || !valid_name(c.sentence)) {
      report(ViolationKind::kMalformed, "invalid name in contrary", c.line);
      continue;
    }
    known.insert(c.sentence);
    if (!assumptions.count(c.assumption)) {
      report(ViolationKind::kUndeclaredName, "contrary given for undeclared assumption '" + c.assumption + "'",
             c.line);
      continue;
    }
    if (!contrary_seen.emplace(c.assumption, c.line).second)
      report(ViolationKind::kDuplicateDeclaration, "contrary of '" + c.assumption + "' declared twice", c.line);
  }
  for (const auto& [n, line] : assumptions) {
    if (!contrary_seen.count(n))
      report(ViolationKind::kMissingContrary, "assumption '" + n + "' has no contrary", line);
  }

  for (const auto& r : raw.rules) {
    bool ok = valid_name(r.head);
    for (const auto& b : r.body) ok = ok && valid_name(b);
    if (!ok) {
      report(ViolationKind::kMalformed, "invalid name in rule", r.line);
      continue;
    }
    known.insert(r.head);
    known.insert(r.body.begin(), r.body.end());
    if (assumptions.count(r.head))
      report(ViolationKind::kNotFlat, "assumption '" + r.head + "' occurs as a rule head", r.line);
  }

  for (const auto& p : raw.prefs) {
    for (const auto* n : {&p.stronger, &p.weaker}) {
      if (!valid_name(*n)) {
        report(ViolationKind::kMalformed, "invalid name in preference", p.line);
      } else if (!known.count(*n)) {
        report(ViolationKind::kUndeclaredName, "preference names undeclared '" + *n + "'", p.line);
      } else if (!assumptions.count(*n)) {
        report(ViolationKind::kNonAssumptionPreference, "preference names non-assumption '" + *n + "'", p.line);
      }
    }
  }
  return out;
}

Framework Framework::build(const RawFramework& raw, std::vector<std::string>* warnings) {
  if (auto vs = validate(raw); !vs.empty()) throw FrameworkError(std::move(vs));

  std::set<std::string> all;
  std::set<std::string> asm_names;
  for (const auto& a : raw.assumptions) {
    all.insert(a.name);
    asm_names.insert(a.name);
  }
  for (const auto& c : raw.contraries) all.insert(c.sentence);
  for (const auto& r : raw.rules) {
    all.insert(r.head);
    all.insert(r.body.begin(), r.body.end());
  }

  Framework f;
  f.names_.assign(all.begin(), all.end());
  for (SentenceId i = 0; i < f.names_.size(); ++i) f.ids_.emplace(f.names_[i], i);
  f.assumption_of_.assign(f.names_.size(), -1);
  for (const auto& n : asm_names) {
    const SentenceId s = f.ids_.at(n);
    f.assumption_of_[s] = static_cast<int>(f.assumption_sentence_.size());
    f.assumption_sentence_.push_back(s);
  }
  f.contrary_.assign(f.assumption_sentence_.size(), 0);
  for (const auto& c : raw.contraries) {
    f.contrary_[static_cast<std::size_t>(f.assumption_of_[f.ids_.at(c.assumption)])] = f.ids_.at(c.sentence);
  }

  std::set<std::pair<SentenceId, std::vector<SentenceId>>> rule_set;
  for (const auto& r : raw.rules) {
    std::vector<SentenceId> body;
    for (const auto& b : r.body) body.push_back(f.ids_.at(b));
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
    if (!rule_set.emplace(f.ids_.at(r.head), std::move(body)).second && warnings) {
      warnings->push_back("line " + std::to_string(r.line) + ": duplicate rule for '" + r.head + "' ignored");
    }
  }
  f.by_head_.assign(f.names_.size(), {});
  f.by_body_.assign(f.names_.size(), {});
  for (const auto& [head, body] : rule_set) {
    const auto id = static_cast<RuleId>(f.rules_.size());
    f.rules_.push_back(Rule{id, head, body});
    f.by_head_[head].push_back(id);
    for (SentenceId b : body) f.by_body_[b].push_back(id);
    if (body.empty()) f.facts_.push_back(id);
  }

  std::set<PrefPair> declared;
  for (const auto& p : raw.prefs) {
    declared.insert(PrefPair{static_cast<AssumptionId>(f.assumption_of_[f.ids_.at(p.stronger)]),
                             static_cast<AssumptionId>(f.assumption_of_[f.ids_.at(p.weaker)])});
  }
  f.declared_.assign(declared.begin(), declared.end());
  f.prefs_ = pref_close(f.num_assumptions(), f.declared_);
  return f;
}

std::optional<SentenceId> Framework::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<AssumptionId> Framework::assumption_of(SentenceId s) const {
  if (s >= assumption_of_.size() || assumption_of_[s] < 0) return std::nullopt;
  return static_cast<AssumptionId>(assumption_of_[s]);
}

Framework Framework::without_preferences() const {
  Framework f = *this;
  f.declared_.clear();
  f.prefs_ = pref_close(num_assumptions(), {});
  return f;
}

AssumptionSet Framework::assumptions_from_names(std::span<const std::string> names) const {
  AssumptionSet out = no_assumptions();
  for (const auto& n : names) {
    auto s = find(n);
    auto a = s ? assumption_of(*s) : std::nullopt;
    if (!a) throw std::invalid_argument("'" + n + "' is not an assumption");
    out.insert(*a);
  }
  return out;
}

std::string Framework::format(const AssumptionSet& set) const {
  std::string out;
  set.for_each([&](std::size_t a) {
    if (!out.empty()) out += ' ';
    out += assumption_name(static_cast<AssumptionId>(a));
  });
  return out;
}

std::vector<std::pair<SentenceId, std::vector<SentenceId>>> Framework::rule_keys() const {
  std::vector<std::pair<SentenceId, std::vector<SentenceId>>> keys;
  keys.reserve(rules_.size());
  for (const auto& r : rules_) keys.emplace_back(r.head, r.body);
  return keys;
}

RawFramework parse_raw(std::string_view text) {
  RawFramework raw;
  std::vector<Violation> errors;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string> tok;
    std::istringstream is{std::string(line)};
    for (std::string t; is >> t;) tok.push_back(std::move(t));
    if (tok.empty()) continue;

    const std::string& kind = tok[0];
    auto bad_arity = [&] {
      errors.push_back({ViolationKind::kMalformed, "wrong number of fields for '" + kind + "'", line_no});
    };
    if (kind == "a") {
      if (tok.size() != 2) { bad_arity(); continue; }
      raw.assumptions.push_back({tok[1], line_no});
    } else if (kind == "c") {
      if (tok.size() != 3) { bad_arity(); continue; }
      raw.contraries.push_back({tok[1], tok[2], line_no});
    } else if (kind == "r") {
      if (tok.size() < 2) { bad_arity(); continue; }
      raw.rules.push_back({tok[1], std::vector<std::string>(tok.begin() + 2, tok.end()), line_no});
    } else if (kind == "p") {
      if (tok.size() != 3) { bad_arity(); continue; }
      raw.prefs.push_back({tok[1], tok[2], line_no});
    } else {
      errors.push_back({ViolationKind::kMalformed, "unknown statement '" + kind + "'", line_no});
    }
  }
  if (!errors.empty()) throw FrameworkError(std::move(errors));
  return raw;
}

Framework parse_framework(std::string_view text, std::vector<std::string>* warnings) {
  return Framework::build(parse_raw(text), warnings);
}

std::string serialize(const Framework& f) {
  std::ostringstream os;
  for (AssumptionId a = 0; a < f.num_assumptions(); ++a) os << "a " << f.assumption_name(a) << '\n';
  for (AssumptionId a = 0; a < f.num_assumptions(); ++a)
    os << "c " << f.assumption_name(a) << ' ' << f.name(f.contrary(a)) << '\n';
  for (const auto& r : f.rules()) {
    os << "r " << f.name(r.head);
    for (SentenceId b : r.body) os << ' ' << f.name(b);
    os << '\n';
  }
  for (const auto& p : f.declared_prefs())
    os << "p " << f.assumption_name(p.stronger) << ' ' << f.assumption_name(p.weaker) << '\n';
  return os.str();
}

SentenceId contrary_of(const Framework& f, std::string_view name) {
  auto s = f.find(name);
  auto a = s ? f.assumption_of(*s) : std::nullopt;
  if (!a) throw std::invalid_argument("'" + std::string(name) + "' is not an assumption");
  return f.contrary(*a);
}

}  // namespace cegaraba
