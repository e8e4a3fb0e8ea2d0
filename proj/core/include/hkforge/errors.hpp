#ifndef HKFORGE_ERRORS_HPP
#define HKFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hkforge {

/// Malformed input: bad JSON, bad text syntax, unknown names.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input that violates an operation's contract
/// (dimension mismatch, inclusion violation, non-m-primary ideal, ...).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// 64-bit exponent arithmetic would wrap; we fail instead.
class OverflowError : public std::runtime_error {
public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hkforge

#endif
