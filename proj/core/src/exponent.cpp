#include "hkforge/exponent.hpp"

#include <algorithm>

namespace hkforge {

Exponent::Exponent(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  for (std::int64_t c : coords_)
    if (c < 0) throw PreconditionError("exponent coordinate must be non-negative, got " + std::to_string(c));
}

std::int64_t Exponent::total_degree() const {
  std::int64_t s = 0;
  for (std::int64_t c : coords_) s = checked_add(s, c);
  return s;
}

Exponent Exponent::plus(const Exponent& o) const {
  if (o.size() != size()) throw PreconditionError("exponent dimension mismatch");
  std::vector<std::int64_t> r(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) r[i] = checked_add(coords_[i], o.coords_[i]);
  return Exponent(std::move(r));
}

Exponent Exponent::minus_clamped(const Exponent& o) const {
  if (o.size() != size()) throw PreconditionError("exponent dimension mismatch");
  std::vector<std::int64_t> r(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) r[i] = std::max<std::int64_t>(coords_[i] - o.coords_[i], 0);
  return Exponent(std::move(r));
}

Exponent Exponent::scaled(std::int64_t q) const {
  if (q < 0) throw PreconditionError("cannot scale an exponent by a negative factor");
  std::vector<std::int64_t> r(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) r[i] = checked_mul(coords_[i], q);
  return Exponent(std::move(r));
}

Exponent Exponent::lcm(const Exponent& o) const {
  if (o.size() != size()) throw PreconditionError("exponent dimension mismatch");
  std::vector<std::int64_t> r(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) r[i] = std::max(coords_[i], o.coords_[i]);
  return Exponent(std::move(r));
}

bool Exponent::divides(const Exponent& o) const {
  if (o.size() != size()) throw PreconditionError("exponent dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > o.coords_[i]) return false;
  return true;
}

std::string Exponent::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

} // namespace hkforge
