#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cegaraba/framework.hpp"
#include "cegaraba/results.hpp"

namespace cegaraba {

inline constexpr std::size_t kOracleMaxAssumptions = 16;

class OracleSizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact leaf sets of tree-derivations: X belongs to the family iff some
/// finite derivation tree for the target has leaf labels drawn from X and
/// every member of X labels a leaf.
using LeafSetFamily = std::vector<AssumptionSet>;

enum class OracleSemantics { kAdmissible, kComplete, kPreferred, kAdmissiblePlus, kCompletePlus };

/// Brute-force reference semantics. Everything is computed straight from the
/// definitions over explicit subsets, independently of the closure and reach
/// machinery used by the solvers. Throws OracleSizeError past
/// kOracleMaxAssumptions.
class Oracle {
 public:
  explicit Oracle(const Framework& f);

  const Framework& framework() const { return *f_; }

  LeafSetFamily leafsets(SentenceId s, const AssumptionSet& pool) const;
  bool attacks_plus(const AssumptionSet& a, const AssumptionSet& b) const;
  /// Preference-free attack: some member of b has its contrary derivable from a.
  bool attacks_plain(const AssumptionSet& a, const AssumptionSet& b) const;
  bool derives(const AssumptionSet& a, SentenceId s) const;

  ExtensionFamily extensions(OracleSemantics sem) const;

 private:
  using Mask = std::uint32_t;

  Mask mask_of(const AssumptionSet& s) const;
  AssumptionSet set_of(Mask m) const;
  bool att_plus(Mask a, Mask b) const { return (normal_[a] & b) || (reverse_[b] & a); }
  bool att_plain(Mask a, Mask b) const { return plain_[a] & b; }

  template <class Att>
  std::vector<Mask> admissible(Att att) const;
  template <class Att>
  std::vector<Mask> complete(Att att, const std::vector<Mask>& adm) const;

  const Framework* f_;
  std::size_t m_;
  std::vector<std::vector<Mask>> leaf_;  // per sentence, pool = all assumptions
  std::vector<Mask> below_;              // per assumption: strictly less preferred
  std::vector<Mask> normal_;             // per attacker mask: assumptions normally attacked
  std::vector<Mask> reverse_;            // per attacked-side mask B: members a with B' in B reversely hitting a
  std::vector<Mask> plain_;              // per mask: assumptions whose contrary it derives
  std::vector<std::vector<char>> closure_;  // per mask: naive closure
};

LeafSetFamily oracle_leafsets(const Framework& f, SentenceId s, const AssumptionSet& pool);
bool oracle_attacks_plus(const Framework& f, const AssumptionSet& a, const AssumptionSet& b);
ExtensionFamily oracle_extensions(const Framework& f, OracleSemantics sem);

}  // namespace cegaraba
