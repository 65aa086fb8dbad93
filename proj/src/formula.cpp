#include "meadow/formula.hpp"

#include <stdexcept>
#include <vector>

namespace meadow {

struct Formula::Node {
  FormulaKind kind;
  std::vector<Term> terms;
  std::vector<Formula> subs;
  std::string var;
};

Formula Formula::eq(Term a, Term b) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Eq, {std::move(a), std::move(b)}, {}, {}}));
}
Formula Formula::neq(Term a, Term b) { return negation(eq(std::move(a), std::move(b))); }
Formula Formula::gt(Term a, Term b) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Gt, {std::move(a), std::move(b)}, {}, {}}));
}
Formula Formula::lt(Term a, Term b) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Lt, {std::move(a), std::move(b)}, {}, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Not, {}, {std::move(f)}, {}}));
}
Formula Formula::conj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::And, {}, {std::move(a), std::move(b)}, {}}));
}
Formula Formula::disj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Or, {}, {std::move(a), std::move(b)}, {}}));
}
Formula Formula::implies(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Implies, {}, {std::move(a), std::move(b)}, {}}));
}
Formula Formula::forall(std::string var, Formula body) {
  if (!is_valid_identifier(var)) throw std::invalid_argument("invalid bound variable '" + var + "'");
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Forall, {}, {std::move(body)}, std::move(var)}));
}
Formula Formula::exists(std::string var, Formula body) {
  if (!is_valid_identifier(var)) throw std::invalid_argument("invalid bound variable '" + var + "'");
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Exists, {}, {std::move(body)}, std::move(var)}));
}

FormulaKind Formula::kind() const { return node_->kind; }
bool Formula::is_atom() const {
  return node_->kind == FormulaKind::Eq || node_->kind == FormulaKind::Gt || node_->kind == FormulaKind::Lt;
}
bool Formula::is_quantifier() const {
  return node_->kind == FormulaKind::Forall || node_->kind == FormulaKind::Exists;
}

const Term& Formula::left_term() const { return node_->terms.at(0); }
const Term& Formula::right_term() const { return node_->terms.at(1); }
const Formula& Formula::operand() const { return node_->subs.at(0); }
const Formula& Formula::lhs() const { return node_->subs.at(0); }
const Formula& Formula::rhs() const { return node_->subs.at(1); }
const std::string& Formula::bound_var() const { return node_->var; }
const Formula& Formula::body() const { return node_->subs.at(0); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.var == y.var && x.terms == y.terms && x.subs == y.subs;
}

namespace {

void collect(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (f.is_atom()) {
    std::set<std::string> vars;
    collect_vars(f.left_term(), vars);
    collect_vars(f.right_term(), vars);
    for (const auto& v : vars) {
      if (!bound.count(v)) out.insert(v);
    }
    return;
  }
  switch (f.kind()) {
    case FormulaKind::Not:
      collect(f.operand(), bound, out);
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      collect(f.lhs(), bound, out);
      collect(f.rhs(), bound, out);
      break;
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      bool fresh = bound.insert(f.bound_var()).second;
      collect(f.body(), bound, out);
      if (fresh) bound.erase(f.bound_var());
      break;
    }
    default:
      break;
  }
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect(f, bound, out);
  return out;
}

bool is_closed(const Formula& f) { return free_vars(f).empty(); }

bool has_quantifier(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Forall:
    case FormulaKind::Exists: return true;
    case FormulaKind::Not: return has_quantifier(f.operand());
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: return has_quantifier(f.lhs()) || has_quantifier(f.rhs());
    default: return false;
  }
}

}  // namespace meadow
