#include "meadow/printer.hpp"

namespace meadow {

namespace {

// Binding strength, loosest first.
enum TermLevel { kSum = 1, kProd = 2, kUnary = 3, kPostfix = 4, kAtom = 5 };

int level(const Term& t) {
  switch (t.kind()) {
    case TermKind::Add: return kSum;
    case TermKind::Mul:
    case TermKind::Div: return kProd;
    case TermKind::Neg: return kUnary;
    case TermKind::Inv: return kPostfix;
    default: return kAtom;
  }
}

void emit(const Term& t, int min_level, std::string& out);

void emit_bare(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Zero: out += '0'; break;
    case TermKind::One: out += '1'; break;
    case TermKind::Var: out += t.name(); break;
    case TermKind::NumLit: out += t.numeral().get_str(); break;
    case TermKind::Add:
      emit(t.lhs(), kSum, out);
      if (t.rhs().kind() == TermKind::Neg) {
        out += " - ";
        emit(t.rhs().operand(), kProd, out);
      } else {
        out += " + ";
        emit(t.rhs(), kProd, out);
      }
      break;
    case TermKind::Mul:
    case TermKind::Div:
      emit(t.lhs(), kProd, out);
      out += t.kind() == TermKind::Mul ? '*' : '/';
      emit(t.rhs(), kUnary, out);
      break;
    case TermKind::Neg:
      out += '-';
      emit(t.operand(), kUnary, out);
      break;
    case TermKind::Inv:
      emit(t.operand(), kPostfix, out);
      out += "^-1";
      break;
  }
}

void emit(const Term& t, int min_level, std::string& out) {
  if (level(t) < min_level) {
    out += '(';
    emit_bare(t, out);
    out += ')';
  } else {
    emit_bare(t, out);
  }
}

enum FormulaLevel { kQuant = 0, kImpl = 1, kDisj = 2, kConj = 3, kNeg = 4, kFAtom = 5 };

int level(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Forall:
    case FormulaKind::Exists: return kQuant;
    case FormulaKind::Implies: return kImpl;
    case FormulaKind::Or: return kDisj;
    case FormulaKind::And: return kConj;
    case FormulaKind::Not: return f.operand().kind() == FormulaKind::Eq ? kFAtom : kNeg;
    default: return kFAtom;
  }
}

void emit(const Formula& f, int min_level, std::string& out);

void emit_atom(const Term& a, const char* op, const Term& b, std::string& out) {
  emit(a, kSum, out);
  out += op;
  emit(b, kSum, out);
}

void emit_bare(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Eq: emit_atom(f.left_term(), " = ", f.right_term(), out); break;
    case FormulaKind::Gt: emit_atom(f.left_term(), " > ", f.right_term(), out); break;
    case FormulaKind::Lt: emit_atom(f.left_term(), " < ", f.right_term(), out); break;
    case FormulaKind::Not:
      if (f.operand().kind() == FormulaKind::Eq) {
        emit_atom(f.operand().left_term(), " != ", f.operand().right_term(), out);
      } else {
        out += '!';
        emit(f.operand(), kNeg, out);
      }
      break;
    case FormulaKind::And:
      emit(f.lhs(), kConj, out);
      out += " & ";
      emit(f.rhs(), kNeg, out);
      break;
    case FormulaKind::Or:
      emit(f.lhs(), kDisj, out);
      out += " | ";
      emit(f.rhs(), kConj, out);
      break;
    case FormulaKind::Implies:
      emit(f.lhs(), kDisj, out);
      out += " => ";
      emit(f.rhs(), kImpl, out);
      break;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out += f.kind() == FormulaKind::Forall ? "forall " : "exists ";
      out += f.bound_var();
      out += ". ";
      emit(f.body(), kQuant, out);
      break;
  }
}

void emit(const Formula& f, int min_level, std::string& out) {
  if (level(f) < min_level) {
    out += '(';
    emit_bare(f, out);
    out += ')';
  } else {
    emit_bare(f, out);
  }
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  emit(t, kSum, out);
  return out;
}

std::string print_formula(const Formula& f) {
  std::string out;
  emit(f, kQuant, out);
  return out;
}

}  // namespace meadow
