#include "hkforge/ring.hpp"

#include <set>

namespace hkforge {

Ring::Ring(std::int64_t p, std::vector<std::string> var_names)
    : p_(p), var_names_(std::move(var_names)) {
  if (!is_prime(p_)) throw PreconditionError("characteristic must be prime, got " + std::to_string(p_));
  if (var_names_.empty()) throw PreconditionError("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : var_names_) {
    if (v.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(v).second) throw PreconditionError("duplicate variable name '" + v + "'");
  }
}

std::int64_t Ring::q_pow(int e) const { return checked_pow(p_, e); }

bool Ring::is_q_power(std::int64_t q, int* e_out) const {
  if (q < 1) return false;
  int e = 0;
  std::int64_t v = q;
  while (v % p_ == 0) {
    v /= p_;
    ++e;
  }
  if (v != 1) return false;
  if (e_out) *e_out = e;
  return true;
}

} // namespace hkforge
