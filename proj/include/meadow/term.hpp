#ifndef MEADOW_TERM_HPP
#define MEADOW_TERM_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace meadow {

enum class TermKind { Zero, One, Var, NumLit, Add, Mul, Neg, Inv, Div };

/// Immutable term over the combined inversive/divisive meadow signature.
/// Copies share structure; equality is structural.
class Term {
 public:
  static Term zero();
  static Term one();
  /// Throws std::invalid_argument unless `name` matches [a-zA-Z][a-zA-Z0-9_]*.
  static Term var(std::string name);
  /// 0 and 1 map to zero() and one(). Negative numerals are rejected; write neg(num(n)).
  static Term num(const mpz_class& n);
  static Term add(Term a, Term b);
  static Term mul(Term a, Term b);
  static Term neg(Term a);
  static Term inv(Term a);
  static Term div(Term a, Term b);

  TermKind kind() const;
  const std::string& name() const;     // Var only
  const mpz_class& numeral() const;    // NumLit only
  const Term& lhs() const;             // Add, Mul, Div
  const Term& rhs() const;             // Add, Mul, Div
  const Term& operand() const;         // Neg, Inv
  std::size_t arity() const;
  const Term& child(std::size_t i) const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

bool is_valid_identifier(const std::string& name);

std::set<std::string> free_vars(const Term& t);
void collect_vars(const Term& t, std::set<std::string>& out);

bool contains_div(const Term& t);
bool contains_inv(const Term& t);

enum class Notation { Common, Inversive, Divisive, Mixed };

/// Common: neither inverse nor division. Inversive: inverse but no division.
/// Divisive: division but no inverse. Mixed: both.
Notation classify_notation(const Term& t);

/// Rewrites x / y to x * y^-1 everywhere.
Term to_inversive(const Term& t);
/// Rewrites x^-1 to 1 / x everywhere.
Term to_divisive(const Term& t);

// Convenience operators for building terms in code.
inline Term operator+(Term a, Term b) { return Term::add(std::move(a), std::move(b)); }
inline Term operator*(Term a, Term b) { return Term::mul(std::move(a), std::move(b)); }
inline Term operator/(Term a, Term b) { return Term::div(std::move(a), std::move(b)); }
inline Term operator-(Term a) { return Term::neg(std::move(a)); }

}  // namespace meadow

#endif
