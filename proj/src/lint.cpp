#include "meadow/lint.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "meadow/printer.hpp"

namespace meadow {

Convention parse_convention(std::string_view text) {
  if (text == "inversive") return Convention::Inversive;
  if (text == "division") return Convention::Division;
  if (text == "liberal-division" || text == "liberal") return Convention::LiberalDivision;
  throw std::invalid_argument("unknown convention '" + std::string(text) + "'");
}

std::string convention_name(Convention c) {
  switch (c) {
    case Convention::Inversive: return "inversive";
    case Convention::Division: return "division";
    case Convention::LiberalDivision: return "liberal-division";
  }
  return {};
}

namespace {

void collect(const Term& t, std::vector<Occurrence>& out) {
  switch (t.kind()) {
    case TermKind::Div:
      collect(t.lhs(), out);
      out.push_back({OperatorKind::Div, t.lhs(), t.rhs(), out.size()});
      collect(t.rhs(), out);
      break;
    case TermKind::Inv:
      collect(t.operand(), out);
      out.push_back({OperatorKind::Inv, std::nullopt, t.operand(), out.size()});
      break;
    default:
      for (std::size_t i = 0; i < t.arity(); ++i) collect(t.child(i), out);
  }
}

void collect(const Formula& f, std::vector<Occurrence>& out) {
  if (f.is_atom()) {
    collect(f.left_term(), out);
    collect(f.right_term(), out);
    return;
  }
  switch (f.kind()) {
    case FormulaKind::Not: collect(f.operand(), out); break;
    case FormulaKind::Forall:
    case FormulaKind::Exists: collect(f.body(), out); break;
    default:
      collect(f.lhs(), out);
      collect(f.rhs(), out);
  }
}

const StructureSpec& rationals() {
  static const StructureSpec s{Carrier::rationals(), Mode::Total};
  return s;
}

std::optional<Rational> constant_value(const Term& t) {
  if (!free_vars(t).empty()) return std::nullopt;
  return eval_total(t, Env{}, rationals()).value();
}

void flatten(const Term& t, TermKind kind, std::vector<Term>& out) {
  if (t.kind() == kind) {
    flatten(t.lhs(), kind, out);
    flatten(t.rhs(), kind, out);
  } else {
    out.push_back(t);
  }
}

// A product whose non-constant factors pair up, scaled by a positive constant.
bool is_weighted_square(const Term& t) {
  std::vector<Term> factors;
  flatten(t, TermKind::Mul, factors);
  Rational scale(1);
  std::vector<Term> rest;
  for (const auto& f : factors) {
    if (auto c = constant_value(f)) {
      scale = scale * *c;
    } else {
      rest.push_back(normalize_ac(f));
    }
  }
  if (rest.empty() || scale.sign() <= 0) return false;
  std::vector<bool> used(rest.size(), false);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (used[i]) continue;
    std::size_t count = 0;
    for (std::size_t j = i; j < rest.size(); ++j) {
      if (!used[j] && rest[j] == rest[i]) {
        used[j] = true;
        ++count;
      }
    }
    if (count % 2 != 0) return false;
  }
  return true;
}

bool is_positive_plus_squares(const Term& t) {
  std::vector<Term> summands;
  flatten(t, TermKind::Add, summands);
  Rational constant(0);
  bool any_square = false;
  for (const auto& s : summands) {
    if (auto c = constant_value(s)) {
      constant = constant + *c;
    } else if (is_weighted_square(s)) {
      any_square = true;
    } else {
      return false;
    }
  }
  return any_square && constant.sign() > 0;
}

}  // namespace

std::vector<Occurrence> collect_occurrences(const Term& t) {
  std::vector<Occurrence> out;
  collect(t, out);
  return out;
}

std::vector<Occurrence> collect_occurrences(const Formula& f) {
  std::vector<Occurrence> out;
  collect(f, out);
  return out;
}

std::string Certificate::str() const {
  switch (kind) {
    case CertificateKind::NonzeroConstant: return "NonzeroConstant";
    case CertificateKind::OnePlusSumOfSquares: return "OnePlusSumOfSquares";
    case CertificateKind::ProductOfCertified: return "ProductOfCertified";
    case CertificateKind::HypothesisDerived: return "HypothesisDerived(" + std::to_string(hypothesis.value_or(0)) + ")";
    case CertificateKind::ZeroNumerator: return "ZeroNumerator";
  }
  return {};
}

Term normalize_ac(const Term& t) {
  if (t.kind() == TermKind::Add || t.kind() == TermKind::Mul) {
    std::vector<Term> parts;
    flatten(t, t.kind(), parts);
    std::vector<std::pair<std::string, Term>> keyed;
    for (const auto& p : parts) {
      Term n = normalize_ac(p);
      keyed.emplace_back(print_term(n), n);
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Term out = keyed.front().second;
    for (std::size_t i = 1; i < keyed.size(); ++i) {
      out = t.kind() == TermKind::Add ? Term::add(out, keyed[i].second) : Term::mul(out, keyed[i].second);
    }
    return out;
  }
  switch (t.kind()) {
    case TermKind::Div: return Term::div(normalize_ac(t.lhs()), normalize_ac(t.rhs()));
    case TermKind::Neg: return Term::neg(normalize_ac(t.operand()));
    case TermKind::Inv: return Term::inv(normalize_ac(t.operand()));
    default: return t;
  }
}

std::optional<Certificate> nonzero_certificate(const Term& t, const std::vector<NonzeroFact>& facts) {
  if (auto c = constant_value(t)) {
    if (c->is_zero()) return std::nullopt;
    return Certificate{CertificateKind::NonzeroConstant, std::nullopt};
  }
  if (is_positive_plus_squares(t)) return Certificate{CertificateKind::OnePlusSumOfSquares, std::nullopt};
  if (t.kind() == TermKind::Mul) {
    std::vector<Term> factors;
    flatten(t, TermKind::Mul, factors);
    std::optional<std::size_t> latest;
    bool all = true;
    for (const auto& f : factors) {
      auto sub = nonzero_certificate(f, facts);
      if (!sub) {
        all = false;
        break;
      }
      if (sub->hypothesis) latest = std::max(latest.value_or(0), *sub->hypothesis);
    }
    if (all) return Certificate{CertificateKind::ProductOfCertified, latest};
  }
  Term key = normalize_ac(t);
  std::optional<std::size_t> earliest;
  for (const auto& fact : facts) {
    if (normalize_ac(fact.term) == key) earliest = std::min(earliest.value_or(fact.statement), fact.statement);
  }
  if (earliest) return Certificate{CertificateKind::HypothesisDerived, earliest};
  return std::nullopt;
}

std::optional<Env> find_zero_witness(const Term& t, const WitnessBudget& budget, const std::vector<Term>& nonzero,
                                     const std::vector<Term>& required) {
  std::set<std::string> vars = free_vars(t);
  std::vector<Term> relevant = required;
  for (const auto& r : required) {
    auto fv = free_vars(r);
    vars.insert(fv.begin(), fv.end());
  }
  // Constraints that share a variable with the search pull their variables
  // in; the rest cannot be falsified by this witness and are ignored.
  bool grew = true;
  std::vector<bool> taken(nonzero.size(), false);
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < nonzero.size(); ++i) {
      if (taken[i]) continue;
      auto fv = free_vars(nonzero[i]);
      bool touches = fv.empty() || std::any_of(fv.begin(), fv.end(), [&](const auto& v) { return vars.count(v); });
      if (touches) {
        taken[i] = true;
        relevant.push_back(nonzero[i]);
        std::size_t before = vars.size();
        vars.insert(fv.begin(), fv.end());
        grew = grew || vars.size() != before;
      }
    }
  }
  if (vars.size() > budget.max_vars) return std::nullopt;
  std::vector<std::string> names(vars.begin(), vars.end());

  const StructureSpec& q = rationals();
  auto accept = [&](const Env& env) {
    if (!eval_total(t, env, q).is_zero()) return false;
    return std::none_of(relevant.begin(), relevant.end(),
                        [&](const Term& c) { return eval_total(c, env, q).is_zero(); });
  };

  auto sweep = [&](const std::vector<Rational>& values) -> std::optional<Env> {
    std::vector<std::size_t> digits(names.size(), 0);
    while (true) {
      Env env;
      for (std::size_t i = 0; i < names.size(); ++i) env.emplace(names[i], Element::rational(values[digits[i]]));
      if (accept(env)) return env;
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == values.size()) digits[i++] = 0;
      if (i == digits.size()) return std::nullopt;
    }
  };

  for (std::uint32_t p : budget.primes) {
    std::vector<Rational> lifted;
    for (std::uint32_t v = 0; v < p; ++v) lifted.emplace_back(static_cast<long>(v));
    if (auto hit = sweep(lifted)) return hit;
  }

  std::vector<Rational> small;
  for (long d = 1; d <= budget.max_denominator; ++d) {
    for (long n = 0; n <= budget.max_numerator; ++n) {
      for (long sign : {1L, -1L}) {
        Rational r = Rational::normalize(sign * n, d);
        if (std::find(small.begin(), small.end(), r) == small.end()) small.push_back(r);
      }
    }
  }
  return sweep(small);
}

std::string Verdict::verdict_name() const {
  switch (kind) {
    case VerdictKind::Compliant: return "COMPLIANT";
    case VerdictKind::Violation: return "VIOLATION";
    case VerdictKind::Unknown: return "UNKNOWN";
  }
  return {};
}

std::string Verdict::detail() const {
  switch (kind) {
    case VerdictKind::Compliant: return certificate ? certificate->str() : "";
    case VerdictKind::Violation: return "witness{" + (witness && !witness->empty() ? format_env(*witness) : "") + "}";
    case VerdictKind::Unknown: return reason;
  }
  return {};
}

std::string Verdict::line() const {
  return "statement=" + std::to_string(statement) + " pos=" + std::to_string(occurrence.pos) +
         " guarded=" + print_term(occurrence.guarded) + " verdict=" + verdict_name() + " detail=" + detail();
}

namespace {

bool nonzero_constant(const Term& t) {
  auto c = constant_value(t);
  return c && !c->is_zero();
}

// q from t/q or t*q^-1 (either factor order).
std::optional<Term> divided_by(const Term& t) {
  if (t.kind() == TermKind::Div) return t.rhs();
  if (t.kind() == TermKind::Mul) {
    if (t.rhs().kind() == TermKind::Inv) return t.rhs().operand();
    if (t.lhs().kind() == TermKind::Inv) return t.lhs().operand();
  }
  return std::nullopt;
}

void gather_facts(const Formula& f, std::size_t statement, std::vector<NonzeroFact>& out) {
  switch (f.kind()) {
    case FormulaKind::And:
      gather_facts(f.lhs(), statement, out);
      gather_facts(f.rhs(), statement, out);
      break;
    case FormulaKind::Eq: {
      const Term& a = f.left_term();
      const Term& b = f.right_term();
      if (nonzero_constant(b)) {
        if (auto q = divided_by(a)) out.push_back({*q, statement});
      }
      if (nonzero_constant(a)) {
        if (auto q = divided_by(b)) out.push_back({*q, statement});
      }
      break;
    }
    case FormulaKind::Not:
      if (f.operand().kind() == FormulaKind::Eq) {
        const Term& a = f.operand().left_term();
        const Term& b = f.operand().right_term();
        if (b.kind() == TermKind::Zero) out.push_back({a, statement});
        else if (a.kind() == TermKind::Zero) out.push_back({b, statement});
      }
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<NonzeroFact> hypothesis_facts(const Formula& f, std::size_t statement) {
  std::vector<NonzeroFact> out;
  gather_facts(f, statement, out);
  return out;
}

std::vector<Verdict> lint(const std::vector<Statement>& corpus, Convention convention) {
  std::vector<Verdict> out;
  std::vector<NonzeroFact> facts;
  const bool liberal = convention == Convention::LiberalDivision;
  const StructureSpec& q = rationals();

  for (const auto& st : corpus) {
    std::vector<NonzeroFact> visible = facts;
    std::vector<NonzeroFact> pending;
    if (st.kind == StatementKind::Hypothesis) pending = hypothesis_facts(st.formula, st.index);
    visible.insert(visible.end(), pending.begin(), pending.end());

    std::vector<Term> constraints;
    for (const auto& f : visible) constraints.push_back(f.term);

    for (auto& occ : collect_occurrences(st.formula)) {
      Verdict v{st.index, occ, VerdictKind::Unknown, std::nullopt, std::nullopt, {}};
      std::vector<Term> required;
      if (liberal) required.push_back(occ.numerator.value_or(Term::one()));

      if (auto w = find_zero_witness(occ.guarded, WitnessBudget{}, constraints, required)) {
        v.kind = VerdictKind::Violation;
        v.witness = std::move(w);
      } else if (auto cert = nonzero_certificate(occ.guarded, visible)) {
        if (cert->hypothesis == st.index) {
          v.reason = "same-statement hypothesis";
        } else {
          v.kind = VerdictKind::Compliant;
          v.certificate = cert;
        }
      } else if (liberal && occ.numerator && free_vars(*occ.numerator).empty() &&
                 eval_total(*occ.numerator, Env{}, q).is_zero()) {
        v.kind = VerdictKind::Compliant;
        v.certificate = Certificate{CertificateKind::ZeroNumerator, std::nullopt};
      } else {
        v.reason = "no certificate and no witness within budget";
      }
      out.push_back(std::move(v));
    }
    facts.insert(facts.end(), pending.begin(), pending.end());
  }
  return out;
}

}  // namespace meadow
