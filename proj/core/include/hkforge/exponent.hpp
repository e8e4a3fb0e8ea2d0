#ifndef HKFORGE_EXPONENT_HPP
#define HKFORGE_EXPONENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hkforge/errors.hpp"
#include "hkforge/numeric.hpp"

namespace hkforge {

/// A point of N^n: the exponent vector of a monomial. Coordinates are
/// 64-bit and all arithmetic is overflow-checked.
class Exponent {
public:
  Exponent() = default;
  explicit Exponent(std::vector<std::int64_t> coords);

  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  std::int64_t total_degree() const;

  /// Componentwise sum.
  Exponent plus(const Exponent& o) const;
  /// max(this - o, 0) componentwise; the colon rule for monomials.
  Exponent minus_clamped(const Exponent& o) const;
  /// Componentwise scaling by q >= 0.
  Exponent scaled(std::int64_t q) const;
  /// Componentwise max (the lcm of the two monomials).
  Exponent lcm(const Exponent& o) const;

  /// true iff this <= o componentwise, i.e. the monomial divides o.
  bool divides(const Exponent& o) const;

  bool operator==(const Exponent& o) const { return coords_ == o.coords_; }
  bool operator!=(const Exponent& o) const { return coords_ != o.coords_; }
  /// Lexicographic order; the canonical generator order.
  bool operator<(const Exponent& o) const { return coords_ < o.coords_; }

  std::string str() const; // "(2,0,1)"

private:
  std::vector<std::int64_t> coords_;
};

} // namespace hkforge

#endif
