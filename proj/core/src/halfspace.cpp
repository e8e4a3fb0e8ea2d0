#include "hkforge/halfspace.hpp"

namespace hkforge {

HalfSpace::HalfSpace(std::vector<Rat> a, Rat beta) : a_(std::move(a)), beta_(std::move(beta)) {
  if (a_.empty()) throw PreconditionError("half-space needs at least one coordinate");
  for (const Rat& c : a_)
    if (c <= 0) throw PreconditionError("half-space direction must be strictly positive");
  if (beta_ <= 0) throw PreconditionError("half-space bound must be strictly positive");

  Int den = boost::multiprecision::denominator(beta_);
  for (const Rat& c : a_) {
    Int d = boost::multiprecision::denominator(c);
    den = boost::multiprecision::lcm(den, d);
  }
  A_.reserve(a_.size());
  for (const Rat& c : a_) {
    Rat scaled = c * Rat(den);
    A_.push_back(boost::multiprecision::numerator(scaled));
  }
  B_ = boost::multiprecision::numerator(Rat(beta_ * Rat(den)));
}

} // namespace hkforge
