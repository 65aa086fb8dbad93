#ifndef MEADOW_SEMANTICS_HPP
#define MEADOW_SEMANTICS_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "meadow/carrier.hpp"
#include "meadow/formula.hpp"
#include "meadow/term.hpp"

namespace meadow {

/// Which applications are punched out of the total Komori field.
///
///   Total            - inverse and division totalized everywhere.
///   PunchInv0        - 0^-1 is undefined; division stays total.
///   PunchDivAll0     - q / 0 is undefined for every q; inverse stays total.
///   PunchDivNonzero0 - q / 0 is undefined for q != 0; 0 / 0 = 0.
enum class Mode { Total, PunchInv0, PunchDivAll0, PunchDivNonzero0 };

/// Accepts `total`, `punch-inv0`, `punch-div-all`, `punch-div-nonzero`.
Mode parse_mode(std::string_view text);
std::string mode_name(Mode m);

struct StructureSpec {
  Carrier carrier;
  Mode mode = Mode::Total;

  std::string name() const;
};

using Env = std::map<std::string, Element>;

/// `x=2/3,y=0`, or `{}` when empty.
std::string format_env(const Env& env);

/// Defined(element) or Undefined.
class PartialValue {
 public:
  PartialValue() = default;
  static PartialValue undefined() { return PartialValue(); }
  static PartialValue defined(Element e) { return PartialValue(std::move(e)); }

  bool is_defined() const { return value_.has_value(); }
  /// Throws std::bad_optional_access when undefined.
  const Element& value() const { return value_.value(); }

  /// The element, or `UNDEFINED`.
  std::string str() const { return value_ ? value_->str() : "UNDEFINED"; }

  friend bool operator==(const PartialValue&, const PartialValue&) = default;

 private:
  explicit PartialValue(Element e) : value_(std::move(e)) {}
  std::optional<Element> value_;
};

/// Counts punched applications met during partial evaluation.
struct EvalTrace {
  std::size_t punched = 0;
};

/// Evaluates in the Komori field over s.carrier; never undefined. The mode
/// of `s` is ignored. Throws UnboundVariable.
Element eval_total(const Term& t, const Env& env, const StructureSpec& s);

/// Strict evaluation in the punched structure: any undefined subterm makes the
/// whole term undefined. Every subterm is evaluated even after one has gone
/// undefined, so `trace->punched` counts all punched applications.
PartialValue eval_partial(const Term& t, const Env& env, const StructureSpec& s, EvalTrace* trace = nullptr);

/// Two-valued truth of a quantifier-free formula in the total structure.
/// Ordering atoms compare rationals and throw DomainError over GF(p).
bool holds_classically(const Formula& f, const Env& env, const StructureSpec& s);

}  // namespace meadow

#endif
