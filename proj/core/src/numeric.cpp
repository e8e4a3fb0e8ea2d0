#include "hkforge/numeric.hpp"

#include <cctype>
#include <sstream>

namespace hkforge {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in addition: " + std::to_string(a) + " + " + std::to_string(b));
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in multiplication: " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

std::int64_t checked_pow(std::int64_t p, int e) {
  if (p < 1 || e < 0) throw PreconditionError("checked_pow: base >= 1 and exponent >= 0 required");
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, p);
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

Rat parse_rational(const std::string& s) {
  auto bad = [&] { throw ParseError("not a rational: '" + s + "'"); };
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) bad();
  std::size_t slash = t.find('/');
  auto is_int = [](const std::string& u) {
    if (u.empty()) return false;
    std::size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
    if (i == u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(t)) bad();
    return Rat(Int(t));
  }
  std::string num = t.substr(0, slash), den = t.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) bad();
  Int d(den);
  if (d == 0) bad();
  return Rat(Int(num), d);
}

std::string rational_to_string(const Rat& r) {
  Int n = boost::multiprecision::numerator(r);
  Int d = boost::multiprecision::denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

std::string rational_to_decimal(const Rat& r, int sig) {
  if (sig < 1) sig = 1;
  if (r == 0) {
    std::string z = "0.";
    z.append(static_cast<std::size_t>(sig - 1), '0');
    return sig == 1 ? "0" : z;
  }
  const bool neg = r < 0;
  Int n = boost::multiprecision::numerator(neg ? Rat(-r) : r);
  Int d = boost::multiprecision::denominator(neg ? Rat(-r) : r);

  // Scale so the integer quotient carries sig digits plus two guard digits,
  // then round the guard digits half-up.
  const Int ten(10);
  // floor(log10(n/d)) by direct comparison against powers of ten.
  int e10 = 0;
  if (n >= d) {
    Int q = n / d;
    while (q >= 10) { q /= 10; ++e10; }
  } else {
    Int x = n;
    while (x < d) { x *= 10; --e10; }
  }
  const int shift = sig + 2 - 1 - e10;
  Int num2 = n, den2 = d;
  if (shift >= 0)
    num2 *= boost::multiprecision::pow(ten, static_cast<unsigned>(shift));
  else
    den2 *= boost::multiprecision::pow(ten, static_cast<unsigned>(-shift));
  Int q = num2 / den2; // has sig+2 digits
  // round last two guard digits half-up
  Int rounded = (q + 50) / 100;
  std::string digits = rounded.str();
  if (static_cast<int>(digits.size()) > sig) {
    // rounding carried (e.g. 999.. -> 1000..): drop trailing zero, bump exponent
    digits.pop_back();
    ++e10;
  }
  while (static_cast<int>(digits.size()) < sig) digits.push_back('0');

  std::string out;
  if (e10 >= -4 && e10 < sig + 4) {
    if (e10 >= sig - 1) {
      out = digits;
      out.append(static_cast<std::size_t>(e10 - sig + 1), '0');
    } else if (e10 >= 0) {
      out = digits.substr(0, static_cast<std::size_t>(e10 + 1)) + "." + digits.substr(static_cast<std::size_t>(e10 + 1));
    } else {
      out = "0.";
      out.append(static_cast<std::size_t>(-e10 - 1), '0');
      out += digits;
    }
  } else {
    out = digits.substr(0, 1) + "." + digits.substr(1) + "e" + (e10 >= 0 ? "+" : "-") + (std::abs(e10) < 10 ? "0" : "") + std::to_string(std::abs(e10));
  }
  return neg ? "-" + out : out;
}

} // namespace hkforge
