#ifndef HKFORGE_HALFSPACE_HPP
#define HKFORGE_HALFSPACE_HPP

#include <cstdint>
#include <vector>

#include "hkforge/errors.hpp"
#include "hkforge/numeric.hpp"

namespace hkforge {

/// A truncating half-space {x : a.x < beta} for the cone R^n_{>=0}.
/// Every a_i is strictly positive, so every truncated region is bounded.
class HalfSpace {
public:
  HalfSpace(std::vector<Rat> a, Rat beta);

  std::size_t dim() const { return a_.size(); }
  const std::vector<Rat>& a() const { return a_; }
  const Rat& beta() const { return beta_; }

  /// The same half-space cleared of denominators: direction A (integers > 0)
  /// and bound B with a.x < beta  <=>  A.x < B for integer points x.
  const std::vector<Int>& int_direction() const { return A_; }
  const Int& int_bound() const { return B_; }

private:
  std::vector<Rat> a_;
  Rat beta_;
  std::vector<Int> A_;
  Int B_;
};

} // namespace hkforge

#endif
