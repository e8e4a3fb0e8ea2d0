#ifndef HKFORGE_PFAMILY_HPP
#define HKFORGE_PFAMILY_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "hkforge/box_region.hpp"
#include "hkforge/monomial_ideal.hpp"

namespace hkforge {

enum class FamilyKind { frobenius, saturated_frobenius, colon, scaled, custom };

std::string family_kind_name(FamilyKind k);

/// A lazily evaluated family q = p^e  ->  I_q of monomial ideals. Evaluation
/// is pure and memoized; the cache is guarded so families can be shared
/// across threads after construction.
///
/// A p-family satisfies I_q^{[p]} ⊆ I_{pq}; a weakly p-family only
/// x^c · I_q^{[p]} ⊆ I_{pq} for a fixed multiplier exponent c. Constructors
/// record which of the two their output is built to satisfy, plus the
/// declared multiplier when weak. Validation is always bounded evidence,
/// never proof.
class PFamily {
public:
  PFamily(Ring ring, FamilyKind kind, std::function<MonomialIdeal(int)> eval,
          bool weakly_only = false, std::optional<Exponent> weak_witness = std::nullopt);

  const Ring& ring() const { return ring_; }
  FamilyKind kind() const { return kind_; }
  bool weakly_only() const { return weakly_only_; }
  const std::optional<Exponent>& declared_witness() const { return weak_witness_; }

  /// I_q at q = p^e.
  MonomialIdeal eval(int e) const;

private:
  Ring ring_;
  FamilyKind kind_;
  std::function<MonomialIdeal(int)> fn_;
  bool weakly_only_;
  std::optional<Exponent> weak_witness_;

  struct Cache {
    std::mutex mu;
    std::map<int, MonomialIdeal> terms;
  };
  std::shared_ptr<Cache> cache_;
};

/// The Frobenius powers q -> I^{[q]}.
PFamily frobenius_family(const MonomialIdeal& I);

/// q -> saturation(F(q)). Still a p-family when F is one.
PFamily saturated_family(const PFamily& F);

/// q -> I^{[q]} : J, a weakly p-family with declared multiplier
/// (p-1) * (componentwise max of gens(J)). J must be nonzero.
PFamily colon_family(const MonomialIdeal& I, const MonomialIdeal& J);

/// q -> x^shift * F(q) (generators translated by a fixed exponent).
PFamily scaled_family(const PFamily& F, const Exponent& shift);

/// Family from an explicit table e -> ideal. When require_valid is set the
/// p-family axiom is checked on all consecutive provided indices and a
/// violation throws PreconditionError. Evaluation outside the table throws.
PFamily custom_family(const Ring& ring, const std::map<int, MonomialIdeal>& terms,
                      bool require_valid = true);

/// Result of a bounded family-axiom check.
struct FamilyReport {
  bool ok = true;
  int e_checked = 0;
  // on failure: the level and the scaled generator that escapes F(e+1)
  std::optional<int> fail_e;
  std::optional<Exponent> witness;
  std::string detail;
};

/// Checks bracket_power(F(e), p) ⊆ F(e+1) for 0 <= e < e_max.
FamilyReport verify_p_family(const PFamily& F, int e_max);

/// Checks x^c · bracket_power(F(e), p) ⊆ F(e+1) for 0 <= e < e_max.
FamilyReport verify_weakly_p(const PFamily& F, const Exponent& c_exponent, int e_max);

/// Outcome of the condition-p(c) check  I_q ∩ m^{cq} = I_q^sat ∩ m^{cq}.
struct PcReport {
  std::int64_t c = 0;
  int e_max = 0;
  bool holds = false;
  // on failure: level e and an exponent lying in I_q^sat ∩ m^{cq} \ I_q
  std::optional<int> fail_e;
  std::optional<Exponent> witness;
};

/// Decides I_q ∩ m^{cq} = I_q^sat ∩ m^{cq} for all e <= e_max. Implemented
/// structurally: the equality at level q holds iff every point of
/// S(I_q^sat) \ S(I_q) has total degree < c*q, so we compare c*q against
/// the maximal degree of the (always finite) difference region.
PcReport check_pc(const PFamily& F, std::int64_t c, int e_max);

/// Smallest c <= c_max whose check_pc holds up to e_max, if any. A pass is
/// evidence up to e_max only, not a proof for all q.
std::optional<std::int64_t> find_min_pc(const PFamily& F, std::int64_t c_max, int e_max);

/// A doubly indexed family (q', q) -> I_{q',q}, memoized like PFamily.
class DoubleFamily {
public:
  DoubleFamily(Ring ring, std::function<MonomialIdeal(int, int)> eval);

  const Ring& ring() const { return ring_; }
  MonomialIdeal eval(int e_outer, int e_inner) const;

private:
  Ring ring_;
  std::function<MonomialIdeal(int, int)> fn_;
  struct Cache {
    std::mutex mu;
    std::map<std::pair<int, int>, MonomialIdeal> terms;
  };
  std::shared_ptr<Cache> cache_;
};

struct DoubleFamilyPair {
  DoubleFamily J; // J_{q',q} = [sat(I^{[q']})]^{[q]}
  DoubleFamily I; // I_{q',q} = I^{[q'q]}
};

/// The double-family construction feeding the limit theorem: validates, on
/// e', e <= check_e_max, the containment hypotheses J_{q',1} = J_{q'},
/// J_{q',q} ⊆ J_{qq'}, I_{q',1} = I_{q'}, I_{q',q} ⊆ I_{qq'}, each column
/// being a p-family. Violations throw PreconditionError with indices.
DoubleFamilyPair ghk_double_family(const MonomialIdeal& I, int check_e_max = 3);

} // namespace hkforge

#endif
