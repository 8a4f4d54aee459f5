#include "cegaraba/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cegaraba {

Oracle::Oracle(const Framework& f) : f_(&f), m_(f.num_assumptions()) {
  if (m_ > kOracleMaxAssumptions)
    throw OracleSizeError("oracle limited to " + std::to_string(kOracleMaxAssumptions) + " assumptions, got " +
                          std::to_string(m_));
  const Mask universe = static_cast<Mask>((std::uint64_t{1} << m_) - 1);
  const std::size_t n = f.num_sentences();

  below_.assign(m_, 0);
  for (AssumptionId x = 0; x < m_; ++x)
    for (AssumptionId y = 0; y < m_; ++y)
      if (f.prefs().strict(x, y)) below_[y] |= Mask{1} << x;

  // Leaf sets by Kleene iteration: a rule contributes every union of one leaf
  // set per body element. Trees may repeat sentences along a path.
  std::vector<std::set<Mask>> fam(n);
  for (AssumptionId a = 0; a < m_; ++a) fam[f.sentence_of(a)].insert(Mask{1} << a);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : f.rules()) {
      std::set<Mask> combos{0};
      for (SentenceId b : r.body) {
        std::set<Mask> next;
        for (Mask x : combos)
          for (Mask y : fam[b]) next.insert(x | y);
        combos = std::move(next);
        if (combos.empty()) break;
      }
      for (Mask c : combos) changed |= fam[r.head].insert(c).second;
    }
  }
  leaf_.resize(n);
  for (SentenceId s = 0; s < n; ++s) leaf_[s].assign(fam[s].begin(), fam[s].end());

  // Naive closures: sweep all rules until nothing new fires.
  closure_.assign(std::size_t{universe} + 1, std::vector<char>(n, 0));
  plain_.assign(std::size_t{universe} + 1, 0);
  for (Mask x = 0;; ++x) {
    auto& cl = closure_[x];
    for (AssumptionId a = 0; a < m_; ++a)
      if (x >> a & 1U) cl[f.sentence_of(a)] = 1;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& r : f.rules()) {
        if (cl[r.head]) continue;
        if (std::all_of(r.body.begin(), r.body.end(), [&](SentenceId b) { return cl[b] != 0; })) {
          cl[r.head] = 1;
          changed = true;
        }
      }
    }
    for (AssumptionId b = 0; b < m_; ++b)
      if (cl[f.contrary(b)]) plain_[x] |= Mask{1} << b;
    if (x == universe) break;
  }

  // Definition-level attack tables over all subsets.
  normal_.assign(std::size_t{universe} + 1, 0);
  reverse_.assign(std::size_t{universe} + 1, 0);
  for (AssumptionId t = 0; t < m_; ++t) {
    for (Mask leaves : leaf_[f.contrary(t)]) {
      const bool weak_leaf = (leaves & below_[t]) != 0;
      for (Mask x = 0;; ++x) {
        if ((x & leaves) == leaves) {
          // x as attacker deriving contrary(t) from leaves none weaker than t.
          if (!weak_leaf) normal_[x] |= Mask{1} << t;
          // x as attacked side: its subset `leaves` derives contrary(t) through
          // a member weaker than t, so any set containing t is reversely attacked.
          if (weak_leaf) reverse_[x] |= Mask{1} << t;
        }
        if (x == universe) break;
      }
    }
  }
}

Oracle::Mask Oracle::mask_of(const AssumptionSet& s) const {
  Mask m = 0;
  s.for_each([&](std::size_t a) { m |= Mask{1} << a; });
  return m;
}

AssumptionSet Oracle::set_of(Mask m) const {
  AssumptionSet s = f_->no_assumptions();
  for (AssumptionId a = 0; a < m_; ++a)
    if (m >> a & 1U) s.insert(a);
  return s;
}

LeafSetFamily Oracle::leafsets(SentenceId s, const AssumptionSet& pool) const {
  const Mask p = mask_of(pool);
  LeafSetFamily out;
  for (Mask x : leaf_[s])
    if ((x & ~p) == 0) out.push_back(set_of(x));
  std::sort(out.begin(), out.end(), shortlex_less<AssumptionTag>);
  return out;
}

bool Oracle::attacks_plus(const AssumptionSet& a, const AssumptionSet& b) const {
  return att_plus(mask_of(a), mask_of(b));
}

bool Oracle::attacks_plain(const AssumptionSet& a, const AssumptionSet& b) const {
  return att_plain(mask_of(a), mask_of(b));
}

bool Oracle::derives(const AssumptionSet& a, SentenceId s) const { return closure_[mask_of(a)][s] != 0; }

template <class Att>
std::vector<Oracle::Mask> Oracle::admissible(Att att) const {
  const Mask universe = static_cast<Mask>((std::uint64_t{1} << m_) - 1);
  std::vector<Mask> out;
  for (Mask a = 0;; ++a) {
    bool ok = !att(a, a);
    for (Mask c = 0; ok; ++c) {
      if (att(c, a) && !att(a, c)) ok = false;
      if (c == universe) break;
    }
    if (ok) out.push_back(a);
    if (a == universe) break;
  }
  return out;
}

template <class Att>
std::vector<Oracle::Mask> Oracle::complete(Att att, const std::vector<Mask>& adm) const {
  const Mask universe = static_cast<Mask>((std::uint64_t{1} << m_) - 1);
  std::vector<Mask> out;
  for (Mask a : adm) {
    // Every set A defends must lie inside A.
    std::vector<char> countered(std::size_t{universe} + 1, 0);
    for (Mask d = 0;; ++d) {
      countered[d] = att(a, d);
      if (d == universe) break;
    }
    bool ok = true;
    for (Mask c = 0; ok; ++c) {
      if ((c & ~a) != 0) {
        bool defended = true;
        for (Mask d = 0; defended; ++d) {
          if (!countered[d] && att(d, c)) defended = false;
          if (d == universe) break;
        }
        if (defended) ok = false;
      }
      if (c == universe) break;
    }
    if (ok) out.push_back(a);
  }
  return out;
}

ExtensionFamily Oracle::extensions(OracleSemantics sem) const {
  auto plain = [this](Mask a, Mask b) { return att_plain(a, b); };
  auto plus = [this](Mask a, Mask b) { return att_plus(a, b); };
  std::vector<Mask> masks;
  switch (sem) {
    case OracleSemantics::kAdmissible: masks = admissible(plain); break;
    case OracleSemantics::kComplete: masks = complete(plain, admissible(plain)); break;
    case OracleSemantics::kAdmissiblePlus: masks = admissible(plus); break;
    case OracleSemantics::kCompletePlus: masks = complete(plus, admissible(plus)); break;
    case OracleSemantics::kPreferred: {
      const auto adm = admissible(plain);
      for (Mask a : adm) {
        const bool maximal =
            std::none_of(adm.begin(), adm.end(), [a](Mask b) { return b != a && (a & b) == a; });
        if (maximal) masks.push_back(a);
      }
      break;
    }
  }
  ExtensionFamily out;
  for (Mask x : masks) out.push_back(set_of(x));
  canonicalize(out);
  return out;
}

LeafSetFamily oracle_leafsets(const Framework& f, SentenceId s, const AssumptionSet& pool) {
  return Oracle(f).leafsets(s, pool);
}

bool oracle_attacks_plus(const Framework& f, const AssumptionSet& a, const AssumptionSet& b) {
  return Oracle(f).attacks_plus(a, b);
}

ExtensionFamily oracle_extensions(const Framework& f, OracleSemantics sem) { return Oracle(f).extensions(sem); }

}  // namespace cegaraba
