#pragma once

#include <stdexcept>
#include <string>

namespace frobq {

// Malformed text input: formulas, polynomials, field specs.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

// A mathematical precondition failed: zero divisor, element outside R,
// reducible modulus, and so on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured height/degree/enumeration cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace frobq
