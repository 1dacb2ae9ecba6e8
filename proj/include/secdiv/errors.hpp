#pragma once

#include <stdexcept>
#include <string>

namespace secdiv {

// Parameter and domain violations. The CLI maps these to exit code 2.
enum class ValidationKind {
  range,            // g, r, d, t, n outside their admissible ranges
  codimension,      // rho(g,r,d) != (n-t)(r+1-t) - 1
  nonpositive_s,    // s = g - d + r <= 0
  length_mismatch,  // vanishing sequence length != r + 1
  delta_range,      // delta outside 0..n
  nonempty,         // none of the four nonemptiness conditions holds
  format,           // malformed flag or config input
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ValidationKind kind() const { return kind_; }

 private:
  ValidationKind kind_;
};

// A violated internal identity: two routes to the same quantity disagree,
// or a computed value breaks a structural invariant. CLI exit code 3.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A ring product left the supported monomial algebra.
class UnreducibleMonomialError : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

}  // namespace secdiv
