#ifndef MEADOW_FORMULA_HPP
#define MEADOW_FORMULA_HPP

#include <memory>
#include <set>
#include <string>

#include "meadow/term.hpp"

namespace meadow {

enum class FormulaKind { Eq, Gt, Lt, Not, And, Or, Implies, Forall, Exists };

/// First-order formula over meadow terms. `t != u` has no node of its own; it
/// is Not(Eq(t, u)). Implication stays a node so each connective family can
/// interpret it.
class Formula {
 public:
  static Formula eq(Term a, Term b);
  static Formula neq(Term a, Term b);
  static Formula gt(Term a, Term b);
  static Formula lt(Term a, Term b);
  static Formula negation(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  FormulaKind kind() const;
  bool is_atom() const;
  bool is_quantifier() const;

  const Term& left_term() const;   // atoms
  const Term& right_term() const;  // atoms
  const Formula& operand() const;  // Not
  const Formula& lhs() const;      // And, Or, Implies
  const Formula& rhs() const;      // And, Or, Implies
  const std::string& bound_var() const;  // quantifiers
  const Formula& body() const;           // quantifiers

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_vars(const Formula& f);
bool is_closed(const Formula& f);
bool has_quantifier(const Formula& f);

/// Applies `rewrite` to every term inside the formula.
template <typename Rewrite>
Formula map_terms(const Formula& f, Rewrite&& rewrite) {
  switch (f.kind()) {
    case FormulaKind::Eq: return Formula::eq(rewrite(f.left_term()), rewrite(f.right_term()));
    case FormulaKind::Gt: return Formula::gt(rewrite(f.left_term()), rewrite(f.right_term()));
    case FormulaKind::Lt: return Formula::lt(rewrite(f.left_term()), rewrite(f.right_term()));
    case FormulaKind::Not: return Formula::negation(map_terms(f.operand(), rewrite));
    case FormulaKind::And: return Formula::conj(map_terms(f.lhs(), rewrite), map_terms(f.rhs(), rewrite));
    case FormulaKind::Or: return Formula::disj(map_terms(f.lhs(), rewrite), map_terms(f.rhs(), rewrite));
    case FormulaKind::Implies: return Formula::implies(map_terms(f.lhs(), rewrite), map_terms(f.rhs(), rewrite));
    case FormulaKind::Forall: return Formula::forall(f.bound_var(), map_terms(f.body(), rewrite));
    case FormulaKind::Exists: return Formula::exists(f.bound_var(), map_terms(f.body(), rewrite));
  }
  return f;
}

}  // namespace meadow

#endif
