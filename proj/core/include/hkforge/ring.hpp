#ifndef HKFORGE_RING_HPP
#define HKFORGE_RING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hkforge/errors.hpp"
#include "hkforge/numeric.hpp"

namespace hkforge {

/// The ambient polynomial ring k[x_1..x_n] over F_p, graded by total degree.
/// All q values are powers p^e of the stored characteristic.
class Ring {
public:
  Ring(std::int64_t p, std::vector<std::string> var_names);

  std::int64_t p() const { return p_; }
  std::size_t nvars() const { return var_names_.size(); }
  const std::vector<std::string>& var_names() const { return var_names_; }

  /// q = p^e, overflow-checked.
  std::int64_t q_pow(int e) const;

  /// true iff q is p^e for some e >= 0; sets e on success.
  bool is_q_power(std::int64_t q, int* e_out = nullptr) const;

  bool operator==(const Ring& o) const { return p_ == o.p_ && var_names_ == o.var_names_; }
  bool operator!=(const Ring& o) const { return !(*this == o); }

private:
  std::int64_t p_;
  std::vector<std::string> var_names_;
};

} // namespace hkforge

#endif
