#ifndef HKFORGE_MONOMIAL_IDEAL_HPP
#define HKFORGE_MONOMIAL_IDEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hkforge/exponent.hpp"
#include "hkforge/ring.hpp"

namespace hkforge {

/// A monomial ideal given by its minimal generators, kept canonical:
/// generators form an antichain under componentwise <= and are sorted
/// lexicographically, so equal ideals have identical representations.
/// The zero ideal has no generators; the unit ideal's single generator
/// is the zero exponent.
class MonomialIdeal {
public:
  const Ring& ring() const { return ring_; }
  const std::vector<Exponent>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].total_degree() == 0; }
  bool is_proper() const { return !is_unit(); }

  /// Membership of the monomial x^e: some generator divides e.
  bool contains_monomial(const Exponent& e) const;

  /// Ideal containment: every generator of other lies in this staircase.
  bool contains_ideal(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal& o) const { return ring_ == o.ring_ && gens_ == o.gens_; }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  std::string str() const; // "(x^2, x*y)"

private:
  friend MonomialIdeal make_ideal(const Ring&, std::vector<Exponent>);
  friend MonomialIdeal make_ideal_presorted(const Ring&, std::vector<Exponent>);
  MonomialIdeal(Ring ring, std::vector<Exponent> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {}

  Ring ring_;
  std::vector<Exponent> gens_;
};

/// Normalizes raw generators: drops dominated ones, sorts lexicographically.
/// An empty list gives the zero ideal.
MonomialIdeal make_ideal(const Ring& ring, std::vector<Exponent> raw_gens);

/// Trusts the caller that gens form a lex-sorted antichain (used for large
/// constructions such as m^k where normalization would be quadratic).
MonomialIdeal make_ideal_presorted(const Ring& ring, std::vector<Exponent> gens);

MonomialIdeal zero_ideal(const Ring& ring);
MonomialIdeal unit_ideal(const Ring& ring);

/// The maximal ideal m = (x_1, ..., x_n).
MonomialIdeal maximal_ideal(const Ring& ring);

/// m^k: all monomials of total degree exactly k. Generator count is
/// C(k+n-1, n-1); throws PreconditionError beyond an explicit cap.
MonomialIdeal m_power(const Ring& ring, std::int64_t k);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// I : J = ∩_{w in gens(J)} (I : x^w), with (I : x^w) generated by
/// max(g - w, 0). The empty intersection gives I : 0 = R.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

/// I^{[q]}: generators scaled by q. q must be a power of the characteristic.
MonomialIdeal bracket_power(const MonomialIdeal& I, std::int64_t q);

/// I : m^∞ as the fixpoint of J ↦ J : m.
MonomialIdeal saturation(const MonomialIdeal& I);

} // namespace hkforge

#endif
