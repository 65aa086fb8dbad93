#ifndef MEADOW_LOGIC_HPP
#define MEADOW_LOGIC_HPP

#include <array>
#include <string>
#include <string_view>
#include <variant>

#include "meadow/formula.hpp"
#include "meadow/semantics.hpp"

namespace meadow {

/// T, F, or U (neither true nor false). Declared in the Kleene truth order
/// F < U < T so that Kleene conjunction and disjunction are min and max.
enum class Truth { F = 0, U = 1, T = 2 };

char truth_char(Truth v);
Truth truth_of(bool b);

enum class EqualityKind { Weak, Strong, Existential };
enum class ConnectiveFamily { Bochvar, Kleene, McCarthyLeft, McCarthyRight };
enum class QuantifierFamily { Bochvar, Kleene };

struct LogicConfig {
  EqualityKind equality = EqualityKind::Weak;
  ConnectiveFamily connectives = ConnectiveFamily::McCarthyLeft;
  QuantifierFamily quantifiers = QuantifierFamily::Bochvar;

  /// Weak equality, left-sequential McCarthy connectives, Bochvar quantifiers.
  static LogicConfig lpmd() { return {}; }

  /// `lpmd`, or `<equality>,<connectives>,<quantifiers>` using the names
  /// below (e.g. `weak,kleene,kleene`).
  static LogicConfig parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const LogicConfig&, const LogicConfig&) = default;
};

std::string equality_name(EqualityKind k);
std::string family_name(ConnectiveFamily f);
std::string family_name(QuantifierFamily q);
ConnectiveFamily parse_connective_family(std::string_view text);

Truth negate(Truth a);
Truth conj(ConnectiveFamily family, Truth a, Truth b);
Truth disj(ConnectiveFamily family, Truth a, Truth b);
/// (not a) or b, within the family.
Truth implies(ConnectiveFamily family, Truth a, Truth b);

/// Truth tables indexed by static_cast<int>(Truth).
struct ConnectiveTable {
  ConnectiveFamily family;
  std::array<Truth, 3> neg;
  std::array<std::array<Truth, 3>, 3> conj;
  std::array<std::array<Truth, 3>, 3> disj;
  std::array<std::array<Truth, 3>, 3> implies;
};

ConnectiveTable connective_table(ConnectiveFamily family);

/// Evaluates both sides with eval_partial; if both denote the result is
/// classical, otherwise Weak gives U, Strong gives T iff both are undefined,
/// Existential gives F.
Truth eval_equality(const Term& t, const Term& u, EqualityKind kind, const Env& env, const StructureSpec& s);

/// Three-valued evaluation. Ordering atoms compare rationals; a non-denoting
/// operand gives U under Weak and F under Strong or Existential.
/// Quantifiers require an enumerable carrier (DomainError otherwise).
Truth eval_formula(const Formula& f, const LogicConfig& cfg, const Env& env, const StructureSpec& s);

/// Outcome under the two-valued logic convention: a sentence is usable only
/// when it is T or F.
struct Usable {
  Truth value;
};
struct Unusable {};
using SentenceClass = std::variant<Usable, Unusable>;

/// Throws std::invalid_argument if `f` has free variables.
SentenceClass classify_sentence(const Formula& f, const LogicConfig& cfg, const StructureSpec& s);

/// `USABLE(T)`, `USABLE(F)` or `UNUSABLE`.
std::string to_string(const SentenceClass& c);

}  // namespace meadow

#endif
