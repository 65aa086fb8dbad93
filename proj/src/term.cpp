#include "meadow/term.hpp"

#include <cctype>
#include <stdexcept>

namespace meadow {

struct Term::Node {
  TermKind kind;
  std::string name;
  mpz_class value;
  std::vector<Term> children;
};

Term Term::zero() {
  static const Term t(std::make_shared<const Node>(Node{TermKind::Zero, {}, 0, {}}));
  return t;
}

Term Term::one() {
  static const Term t(std::make_shared<const Node>(Node{TermKind::One, {}, 1, {}}));
  return t;
}

Term Term::var(std::string name) {
  if (!is_valid_identifier(name)) throw std::invalid_argument("invalid variable name '" + name + "'");
  return Term(std::make_shared<const Node>(Node{TermKind::Var, std::move(name), 0, {}}));
}

Term Term::num(const mpz_class& n) {
  if (n < 0) throw std::invalid_argument("numerals are non-negative; got " + n.get_str());
  if (n == 0) return zero();
  if (n == 1) return one();
  return Term(std::make_shared<const Node>(Node{TermKind::NumLit, {}, n, {}}));
}

Term Term::add(Term a, Term b) {
  return Term(std::make_shared<const Node>(Node{TermKind::Add, {}, 0, {std::move(a), std::move(b)}}));
}
Term Term::mul(Term a, Term b) {
  return Term(std::make_shared<const Node>(Node{TermKind::Mul, {}, 0, {std::move(a), std::move(b)}}));
}
Term Term::div(Term a, Term b) {
  return Term(std::make_shared<const Node>(Node{TermKind::Div, {}, 0, {std::move(a), std::move(b)}}));
}
Term Term::neg(Term a) {
  return Term(std::make_shared<const Node>(Node{TermKind::Neg, {}, 0, {std::move(a)}}));
}
Term Term::inv(Term a) {
  return Term(std::make_shared<const Node>(Node{TermKind::Inv, {}, 0, {std::move(a)}}));
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const mpz_class& Term::numeral() const { return node_->value; }
const Term& Term::lhs() const { return node_->children.at(0); }
const Term& Term::rhs() const { return node_->children.at(1); }
const Term& Term::operand() const { return node_->children.at(0); }
std::size_t Term::arity() const { return node_->children.size(); }
const Term& Term::child(std::size_t i) const { return node_->children.at(i); }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case TermKind::Var: return x.name == y.name;
    case TermKind::NumLit: return x.value == y.value;
    default: break;
  }
  return x.children == y.children;
}

bool is_valid_identifier(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind() == TermKind::Var) {
    out.insert(t.name());
    return;
  }
  for (std::size_t i = 0; i < t.arity(); ++i) collect_vars(t.child(i), out);
}

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

bool contains_div(const Term& t) {
  if (t.kind() == TermKind::Div) return true;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (contains_div(t.child(i))) return true;
  }
  return false;
}

bool contains_inv(const Term& t) {
  if (t.kind() == TermKind::Inv) return true;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (contains_inv(t.child(i))) return true;
  }
  return false;
}

Notation classify_notation(const Term& t) {
  bool d = contains_div(t);
  bool i = contains_inv(t);
  if (d && i) return Notation::Mixed;
  if (d) return Notation::Divisive;
  if (i) return Notation::Inversive;
  return Notation::Common;
}

namespace {

template <typename Rewrite>
Term rebuild(const Term& t, Rewrite&& rewrite) {
  switch (t.kind()) {
    case TermKind::Add: return Term::add(rewrite(t.lhs()), rewrite(t.rhs()));
    case TermKind::Mul: return Term::mul(rewrite(t.lhs()), rewrite(t.rhs()));
    case TermKind::Div: return Term::div(rewrite(t.lhs()), rewrite(t.rhs()));
    case TermKind::Neg: return Term::neg(rewrite(t.operand()));
    case TermKind::Inv: return Term::inv(rewrite(t.operand()));
    default: return t;
  }
}

}  // namespace

Term to_inversive(const Term& t) {
  if (t.kind() == TermKind::Div) return Term::mul(to_inversive(t.lhs()), Term::inv(to_inversive(t.rhs())));
  return rebuild(t, to_inversive);
}

Term to_divisive(const Term& t) {
  if (t.kind() == TermKind::Inv) return Term::div(Term::one(), to_divisive(t.operand()));
  return rebuild(t, to_divisive);
}

}  // namespace meadow
