#include "meadow/logic.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "meadow/errors.hpp"

namespace meadow {

char truth_char(Truth v) {
  switch (v) {
    case Truth::T: return 'T';
    case Truth::F: return 'F';
    case Truth::U: return 'U';
  }
  return '?';
}

Truth truth_of(bool b) { return b ? Truth::T : Truth::F; }

std::string equality_name(EqualityKind k) {
  switch (k) {
    case EqualityKind::Weak: return "weak";
    case EqualityKind::Strong: return "strong";
    case EqualityKind::Existential: return "existential";
  }
  return {};
}

std::string family_name(ConnectiveFamily f) {
  switch (f) {
    case ConnectiveFamily::Bochvar: return "bochvar";
    case ConnectiveFamily::Kleene: return "kleene";
    case ConnectiveFamily::McCarthyLeft: return "mccarthy-left";
    case ConnectiveFamily::McCarthyRight: return "mccarthy-right";
  }
  return {};
}

std::string family_name(QuantifierFamily q) {
  return q == QuantifierFamily::Bochvar ? "bochvar" : "kleene";
}

ConnectiveFamily parse_connective_family(std::string_view text) {
  for (auto f : {ConnectiveFamily::Bochvar, ConnectiveFamily::Kleene, ConnectiveFamily::McCarthyLeft,
                 ConnectiveFamily::McCarthyRight}) {
    if (text == family_name(f)) return f;
  }
  if (text == "mccarthy") return ConnectiveFamily::McCarthyLeft;
  throw std::invalid_argument("unknown connective family '" + std::string(text) + "'");
}

LogicConfig LogicConfig::parse(std::string_view text) {
  if (text == "lpmd") return lpmd();
  std::vector<std::string_view> parts;
  while (true) {
    auto comma = text.find(',');
    parts.push_back(text.substr(0, comma));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  if (parts.size() != 3) throw std::invalid_argument("logic must be 'lpmd' or '<equality>,<connectives>,<quantifiers>'");
  LogicConfig cfg;
  if (parts[0] == "weak") cfg.equality = EqualityKind::Weak;
  else if (parts[0] == "strong") cfg.equality = EqualityKind::Strong;
  else if (parts[0] == "existential") cfg.equality = EqualityKind::Existential;
  else throw std::invalid_argument("unknown equality kind '" + std::string(parts[0]) + "'");
  cfg.connectives = parse_connective_family(parts[1]);
  if (parts[2] == "bochvar") cfg.quantifiers = QuantifierFamily::Bochvar;
  else if (parts[2] == "kleene") cfg.quantifiers = QuantifierFamily::Kleene;
  else throw std::invalid_argument("unknown quantifier family '" + std::string(parts[2]) + "'");
  return cfg;
}

std::string LogicConfig::name() const {
  return equality_name(equality) + "," + family_name(connectives) + "," + family_name(quantifiers);
}

Truth negate(Truth a) {
  switch (a) {
    case Truth::T: return Truth::F;
    case Truth::F: return Truth::T;
    case Truth::U: return Truth::U;
  }
  return Truth::U;
}

Truth conj(ConnectiveFamily family, Truth a, Truth b) {
  switch (family) {
    case ConnectiveFamily::Bochvar:
      if (a == Truth::U || b == Truth::U) return Truth::U;
      return std::min(a, b);
    case ConnectiveFamily::Kleene:
      return std::min(a, b);
    case ConnectiveFamily::McCarthyLeft:
      if (a == Truth::F) return Truth::F;
      if (a == Truth::U) return Truth::U;
      return b;
    case ConnectiveFamily::McCarthyRight:
      return conj(ConnectiveFamily::McCarthyLeft, b, a);
  }
  return Truth::U;
}

Truth disj(ConnectiveFamily family, Truth a, Truth b) {
  switch (family) {
    case ConnectiveFamily::Bochvar:
      if (a == Truth::U || b == Truth::U) return Truth::U;
      return std::max(a, b);
    case ConnectiveFamily::Kleene:
      return std::max(a, b);
    case ConnectiveFamily::McCarthyLeft:
      if (a == Truth::T) return Truth::T;
      if (a == Truth::U) return Truth::U;
      return b;
    case ConnectiveFamily::McCarthyRight:
      return disj(ConnectiveFamily::McCarthyLeft, b, a);
  }
  return Truth::U;
}

Truth implies(ConnectiveFamily family, Truth a, Truth b) { return disj(family, negate(a), b); }

ConnectiveTable connective_table(ConnectiveFamily family) {
  ConnectiveTable table{};
  table.family = family;
  constexpr Truth all[] = {Truth::F, Truth::U, Truth::T};
  for (Truth a : all) {
    int i = static_cast<int>(a);
    table.neg[i] = negate(a);
    for (Truth b : all) {
      int j = static_cast<int>(b);
      table.conj[i][j] = conj(family, a, b);
      table.disj[i][j] = disj(family, a, b);
      table.implies[i][j] = implies(family, a, b);
    }
  }
  return table;
}

Truth eval_equality(const Term& t, const Term& u, EqualityKind kind, const Env& env, const StructureSpec& s) {
  PartialValue a = eval_partial(t, env, s);
  PartialValue b = eval_partial(u, env, s);
  if (a.is_defined() && b.is_defined()) return truth_of(a.value() == b.value());
  switch (kind) {
    case EqualityKind::Weak: return Truth::U;
    case EqualityKind::Strong: return truth_of(!a.is_defined() && !b.is_defined());
    case EqualityKind::Existential: return Truth::F;
  }
  return Truth::U;
}

namespace {

Truth eval_ordering(const Formula& f, EqualityKind kind, const Env& env, const StructureSpec& s) {
  if (s.carrier.kind() == Carrier::Kind::PrimeField) {
    throw DomainError("ordering is not defined over " + s.carrier.name());
  }
  PartialValue a = eval_partial(f.left_term(), env, s);
  PartialValue b = eval_partial(f.right_term(), env, s);
  if (a.is_defined() && b.is_defined()) {
    const Rational& x = a.value().value();
    const Rational& y = b.value().value();
    return truth_of(f.kind() == FormulaKind::Gt ? x > y : x < y);
  }
  return kind == EqualityKind::Weak ? Truth::U : Truth::F;
}

Truth quantify(const Formula& f, const LogicConfig& cfg, const Env& env, const StructureSpec& s) {
  if (!s.carrier.enumerable()) {
    throw DomainError("cannot quantify over " + s.carrier.name() + "; choose a finite carrier");
  }
  bool universal = f.kind() == FormulaKind::Forall;
  bool any_t = false;
  bool any_f = false;
  bool any_u = false;
  Env inner = env;
  for (const Element& e : s.carrier.elements()) {
    inner.insert_or_assign(f.bound_var(), e);
    switch (eval_formula(f.body(), cfg, inner, s)) {
      case Truth::T: any_t = true; break;
      case Truth::F: any_f = true; break;
      case Truth::U: any_u = true; break;
    }
  }
  if (cfg.quantifiers == QuantifierFamily::Bochvar) {
    if (any_u) return Truth::U;
    return truth_of(universal ? !any_f : any_t);
  }
  // Kleene: the decisive value dominates, then U, then the neutral value.
  if (universal) return any_f ? Truth::F : any_u ? Truth::U : Truth::T;
  return any_t ? Truth::T : any_u ? Truth::U : Truth::F;
}

}  // namespace

Truth eval_formula(const Formula& f, const LogicConfig& cfg, const Env& env, const StructureSpec& s) {
  switch (f.kind()) {
    case FormulaKind::Eq:
      return eval_equality(f.left_term(), f.right_term(), cfg.equality, env, s);
    case FormulaKind::Gt:
    case FormulaKind::Lt:
      return eval_ordering(f, cfg.equality, env, s);
    case FormulaKind::Not:
      return negate(eval_formula(f.operand(), cfg, env, s));
    case FormulaKind::And:
      return conj(cfg.connectives, eval_formula(f.lhs(), cfg, env, s), eval_formula(f.rhs(), cfg, env, s));
    case FormulaKind::Or:
      return disj(cfg.connectives, eval_formula(f.lhs(), cfg, env, s), eval_formula(f.rhs(), cfg, env, s));
    case FormulaKind::Implies:
      return implies(cfg.connectives, eval_formula(f.lhs(), cfg, env, s), eval_formula(f.rhs(), cfg, env, s));
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return quantify(f, cfg, env, s);
  }
  return Truth::U;
}

SentenceClass classify_sentence(const Formula& f, const LogicConfig& cfg, const StructureSpec& s) {
  if (!is_closed(f)) throw std::invalid_argument("classify_sentence needs a closed formula");
  Truth v = eval_formula(f, cfg, Env{}, s);
  if (v == Truth::U) return Unusable{};
  return Usable{v};
}

std::string to_string(const SentenceClass& c) {
  if (const auto* u = std::get_if<Usable>(&c)) return std::string("USABLE(") + truth_char(u->value) + ")";
  return "UNUSABLE";
}

}  // namespace meadow
