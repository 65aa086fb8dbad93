#ifndef MEADOW_ERRORS_HPP
#define MEADOW_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace meadow {

/// Malformed term, formula, rational literal or corpus line. `position()` is
/// a zero-based character offset into the offending text.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(const std::string& name)
      : std::runtime_error("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Operands drawn from different carriers, or an element outside its carrier.
class CarrierMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Quantification or exhaustive checking requested over a carrier that cannot
// be enumerated, or an ordering atom over a carrier with no ordering.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace meadow

#endif
