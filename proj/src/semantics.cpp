#include "meadow/semantics.hpp"

#include <stdexcept>

#include "meadow/errors.hpp"

namespace meadow {

Mode parse_mode(std::string_view text) {
  if (text == "total") return Mode::Total;
  if (text == "punch-inv0") return Mode::PunchInv0;
  if (text == "punch-div-all") return Mode::PunchDivAll0;
  if (text == "punch-div-nonzero") return Mode::PunchDivNonzero0;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "'");
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Total: return "total";
    case Mode::PunchInv0: return "punch-inv0";
    case Mode::PunchDivAll0: return "punch-div-all";
    case Mode::PunchDivNonzero0: return "punch-div-nonzero";
  }
  return {};
}

std::string StructureSpec::name() const { return carrier.name() + "/" + mode_name(mode); }

std::string format_env(const Env& env) {
  if (env.empty()) return "{}";
  std::string out;
  for (const auto& [name, value] : env) {
    if (!out.empty()) out += ',';
    out += name + "=" + value.str();
  }
  return out;
}

namespace {

const Element& lookup(const Env& env, const std::string& name) {
  auto it = env.find(name);
  if (it == env.end()) throw UnboundVariable(name);
  return it->second;
}

}  // namespace

Element eval_total(const Term& t, const Env& env, const StructureSpec& s) {
  const Carrier& c = s.carrier;
  switch (t.kind()) {
    case TermKind::Zero: return c.zero();
    case TermKind::One: return c.one();
    case TermKind::NumLit: return c.from_integer(t.numeral());
    case TermKind::Var: return lookup(env, t.name());
    case TermKind::Add: return add(eval_total(t.lhs(), env, s), eval_total(t.rhs(), env, s), c);
    case TermKind::Mul: return mul(eval_total(t.lhs(), env, s), eval_total(t.rhs(), env, s), c);
    case TermKind::Div: return div_total(eval_total(t.lhs(), env, s), eval_total(t.rhs(), env, s), c);
    case TermKind::Neg: return neg(eval_total(t.operand(), env, s), c);
    case TermKind::Inv: return inv_total(eval_total(t.operand(), env, s), c);
  }
  throw std::logic_error("unreachable term kind");
}

PartialValue eval_partial(const Term& t, const Env& env, const StructureSpec& s, EvalTrace* trace) {
  const Carrier& c = s.carrier;
  auto punched = [&] {
    if (trace) ++trace->punched;
    return PartialValue::undefined();
  };
  switch (t.kind()) {
    case TermKind::Zero:
    case TermKind::One:
    case TermKind::NumLit:
    case TermKind::Var:
      return PartialValue::defined(eval_total(t, env, s));
    case TermKind::Neg:
    case TermKind::Inv: {
      PartialValue a = eval_partial(t.operand(), env, s, trace);
      if (!a.is_defined()) return a;
      if (t.kind() == TermKind::Neg) return PartialValue::defined(neg(a.value(), c));
      if (s.mode == Mode::PunchInv0 && a.value().is_zero()) return punched();
      return PartialValue::defined(inv_total(a.value(), c));
    }
    case TermKind::Add:
    case TermKind::Mul:
    case TermKind::Div: {
      PartialValue a = eval_partial(t.lhs(), env, s, trace);
      PartialValue b = eval_partial(t.rhs(), env, s, trace);
      if (!a.is_defined() || !b.is_defined()) return PartialValue::undefined();
      if (t.kind() == TermKind::Add) return PartialValue::defined(add(a.value(), b.value(), c));
      if (t.kind() == TermKind::Mul) return PartialValue::defined(mul(a.value(), b.value(), c));
      if (b.value().is_zero()) {
        if (s.mode == Mode::PunchDivAll0) return punched();
        if (s.mode == Mode::PunchDivNonzero0 && !a.value().is_zero()) return punched();
      }
      return PartialValue::defined(div_total(a.value(), b.value(), c));
    }
  }
  throw std::logic_error("unreachable term kind");
}

bool holds_classically(const Formula& f, const Env& env, const StructureSpec& s) {
  switch (f.kind()) {
    case FormulaKind::Eq:
      return eval_total(f.left_term(), env, s) == eval_total(f.right_term(), env, s);
    case FormulaKind::Gt:
    case FormulaKind::Lt: {
      if (s.carrier.kind() == Carrier::Kind::PrimeField) {
        throw DomainError("ordering is not defined over " + s.carrier.name());
      }
      auto a = eval_total(f.left_term(), env, s).value();
      auto b = eval_total(f.right_term(), env, s).value();
      return f.kind() == FormulaKind::Gt ? a > b : a < b;
    }
    case FormulaKind::Not: return !holds_classically(f.operand(), env, s);
    case FormulaKind::And: return holds_classically(f.lhs(), env, s) && holds_classically(f.rhs(), env, s);
    case FormulaKind::Or: return holds_classically(f.lhs(), env, s) || holds_classically(f.rhs(), env, s);
    case FormulaKind::Implies: return !holds_classically(f.lhs(), env, s) || holds_classically(f.rhs(), env, s);
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      break;
  }
  throw DomainError("classical check takes quantifier-free formulas only");
}

}  // namespace meadow
