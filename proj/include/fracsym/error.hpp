#pragma once

#include <stdexcept>
#include <string>

namespace fracsym {

enum class ErrorCode {
  domain,             // argument outside the operation's domain
  singular,           // pivot below threshold in a factorization
  convergence,        // quadrature/extrapolation did not reach tolerance
  size_limit,         // dimension cap exceeded
  parameter_mismatch, // Lie elements from different algebras
  zero_element,       // classification of the zero vector
  parse,              // malformed text input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace fracsym
