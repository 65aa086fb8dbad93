#include <doctest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "meadow/errors.hpp"
#include "meadow/logic.hpp"
#include "meadow/parser.hpp"
#include "oracle.hpp"

using namespace meadow;

namespace {

const StructureSpec kDivAllQ{Carrier::rationals(), Mode::PunchDivAll0};
const StructureSpec kDivAllF7{Carrier::prime_field(7), Mode::PunchDivAll0};
constexpr Truth kAll[] = {Truth::F, Truth::U, Truth::T};

Truth eq(const char* lhs, const char* rhs, EqualityKind k, const StructureSpec& s = kDivAllQ) {
  return eval_equality(parse_term(lhs), parse_term(rhs), k, {}, s);
}

Truth eval(const char* text, LogicConfig cfg, const StructureSpec& s, const Env& env = {}) {
  return eval_formula(parse_formula(text), cfg, env, s);
}

LogicConfig cfg(const char* text) { return LogicConfig::parse(text); }

// Information order: U below both T and F.
bool refines(Truth less, Truth more) { return less == Truth::U || less == more; }

bool classical_holds(const Formula& f, Env env, const StructureSpec& s) {
  switch (f.kind()) {
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      bool universal = f.kind() == FormulaKind::Forall;
      for (const auto& e : s.carrier.elements()) {
        env.insert_or_assign(f.bound_var(), e);
        if (classical_holds(f.body(), env, s) != universal) return !universal;
      }
      return universal;
    }
    case FormulaKind::Not: return !classical_holds(f.operand(), env, s);
    case FormulaKind::And: return classical_holds(f.lhs(), env, s) && classical_holds(f.rhs(), env, s);
    case FormulaKind::Or: return classical_holds(f.lhs(), env, s) || classical_holds(f.rhs(), env, s);
    case FormulaKind::Implies: return !classical_holds(f.lhs(), env, s) || classical_holds(f.rhs(), env, s);
    default: return holds_classically(f, env, s);
  }
}

}  // namespace

TEST_CASE("equality kinds on non-denoting terms") {
  CHECK(eq("1/0", "1/0 + 1", EqualityKind::Strong) == Truth::T);
  CHECK(eq("1/0", "1/0", EqualityKind::Existential) == Truth::F);
  CHECK(eq("1/0", "1/0", EqualityKind::Weak) == Truth::U);
  CHECK(eq("1/0", "1", EqualityKind::Strong) == Truth::F);
  CHECK(eq("1/0", "1", EqualityKind::Weak) == Truth::U);
  for (auto k : {EqualityKind::Weak, EqualityKind::Strong, EqualityKind::Existential}) {
    CHECK(eq("1+1", "2", k) == Truth::T);
    CHECK(eq("1+1", "3", k) == Truth::F);
  }
}

TEST_CASE("strong equality is an equivalence; existential is never T on undefined sides") {
  std::vector<PartialValue> values{PartialValue::undefined(), PartialValue::defined(Element::rational(0)),
                                   PartialValue::defined(Element::rational(1))};
  // Terms realizing each partial value under PunchDivAll0.
  std::vector<const char*> terms{"1/0", "0", "1"};
  auto strong = [&](std::size_t i, std::size_t j) { return eq(terms[i], terms[j], EqualityKind::Strong) == Truth::T; };
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(strong(i, i));
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(strong(i, j) == strong(j, i));
      CHECK(strong(i, j) == (values[i] == values[j]));
      for (std::size_t k = 0; k < 3; ++k) {
        if (strong(i, j) && strong(j, k)) CHECK(strong(i, k));
      }
      if (!values[i].is_defined() || !values[j].is_defined()) {
        CHECK(eq(terms[i], terms[j], EqualityKind::Existential) == Truth::F);
      }
    }
  }
}

TEST_CASE("connective tables") {
  CHECK(disj(ConnectiveFamily::McCarthyLeft, Truth::U, Truth::T) == Truth::U);
  CHECK(disj(ConnectiveFamily::Kleene, Truth::U, Truth::T) == Truth::T);
  CHECK(implies(ConnectiveFamily::Bochvar, Truth::F, Truth::U) == Truth::U);
  CHECK(implies(ConnectiveFamily::McCarthyLeft, Truth::F, Truth::U) == Truth::T);
  CHECK(implies(ConnectiveFamily::Kleene, Truth::F, Truth::U) == Truth::T);

  // Mirroring the McCarthyLeft rows by hand: U|T reads the left operand T first.
  CHECK(disj(ConnectiveFamily::McCarthyRight, Truth::U, Truth::T) == Truth::T);
  CHECK(disj(ConnectiveFamily::McCarthyRight, Truth::T, Truth::U) == Truth::U);

  for (auto family : {ConnectiveFamily::Bochvar, ConnectiveFamily::Kleene, ConnectiveFamily::McCarthyLeft,
                      ConnectiveFamily::McCarthyRight}) {
    auto table = connective_table(family);
    const auto& and_ref = oracle::and_table(family);
    const auto& or_ref = oracle::or_table(family);
    for (Truth a : kAll) {
      int i = static_cast<int>(a);
      CHECK(table.neg[i] == oracle::to_truth(oracle::kNot[i]));
      for (Truth b : kAll) {
        int j = static_cast<int>(b);
        CHECK(table.conj[i][j] == oracle::to_truth(and_ref[i][j]));
        CHECK(table.disj[i][j] == oracle::to_truth(or_ref[i][j]));
        CHECK(table.implies[i][j] == oracle::to_truth(or_ref[oracle::kNot[i]][j]));
      }
    }
  }
}

TEST_CASE("table properties") {
  const ConnectiveFamily families[] = {ConnectiveFamily::Bochvar, ConnectiveFamily::Kleene,
                                       ConnectiveFamily::McCarthyLeft, ConnectiveFamily::McCarthyRight};
  SUBCASE("classical agreement on {T, F}") {
    for (auto fam : families) {
      for (bool a : {false, true}) {
        CHECK(negate(truth_of(a)) == truth_of(!a));
        for (bool b : {false, true}) {
          CHECK(conj(fam, truth_of(a), truth_of(b)) == truth_of(a && b));
          CHECK(disj(fam, truth_of(a), truth_of(b)) == truth_of(a || b));
          CHECK(implies(fam, truth_of(a), truth_of(b)) == truth_of(!a || b));
        }
      }
    }
  }
  SUBCASE("Bochvar is U-strict") {
    for (Truth a : kAll) {
      CHECK(conj(ConnectiveFamily::Bochvar, a, Truth::U) == Truth::U);
      CHECK(conj(ConnectiveFamily::Bochvar, Truth::U, a) == Truth::U);
      CHECK(disj(ConnectiveFamily::Bochvar, a, Truth::U) == Truth::U);
      CHECK(disj(ConnectiveFamily::Bochvar, Truth::U, a) == Truth::U);
      CHECK(implies(ConnectiveFamily::Bochvar, a, Truth::U) == Truth::U);
      CHECK(implies(ConnectiveFamily::Bochvar, Truth::U, a) == Truth::U);
    }
  }
  SUBCASE("Kleene is monotone in the information order") {
    for (Truth a : kAll) {
      for (Truth a2 : kAll) {
        if (!refines(a, a2)) continue;
        for (Truth b : kAll) {
          for (Truth b2 : kAll) {
            if (!refines(b, b2)) continue;
            CHECK(refines(conj(ConnectiveFamily::Kleene, a, b), conj(ConnectiveFamily::Kleene, a2, b2)));
            CHECK(refines(disj(ConnectiveFamily::Kleene, a, b), disj(ConnectiveFamily::Kleene, a2, b2)));
            CHECK(refines(implies(ConnectiveFamily::Kleene, a, b), implies(ConnectiveFamily::Kleene, a2, b2)));
          }
        }
        CHECK(refines(negate(a), negate(a2)));
      }
    }
  }
  SUBCASE("McCarthyRight mirrors McCarthyLeft") {
    CHECK(disj(ConnectiveFamily::McCarthyLeft, Truth::U, Truth::T) !=
          disj(ConnectiveFamily::McCarthyLeft, Truth::T, Truth::U));
    for (Truth a : kAll) {
      for (Truth b : kAll) {
        CHECK(conj(ConnectiveFamily::McCarthyRight, a, b) == conj(ConnectiveFamily::McCarthyLeft, b, a));
        CHECK(disj(ConnectiveFamily::McCarthyRight, a, b) == disj(ConnectiveFamily::McCarthyLeft, b, a));
      }
    }
  }
}

TEST_CASE("eval_formula on the connective examples") {
  auto lpmd = LogicConfig::lpmd();
  CHECK(eval("0 != 0 => 0/0 = 1", lpmd, kDivAllQ) == Truth::T);
  CHECK(eval("0 = 0 | 0/0 = 1", lpmd, kDivAllQ) == Truth::T);
  CHECK(eval("0/0 = 1 | 0 = 0", lpmd, kDivAllQ) == Truth::U);
  CHECK(eval("0 != 0 => 0/0 = 1", cfg("weak,bochvar,bochvar"), kDivAllQ) == Truth::U);
  CHECK(eval("0 != 0 => 0/0 = 1", cfg("weak,kleene,bochvar"), kDivAllQ) == Truth::T);
  CHECK(eval("0/0 = 1 | 0 = 0", cfg("weak,kleene,bochvar"), kDivAllQ) == Truth::T);
  CHECK(eval("0/0 = 1 | 0 = 0", cfg("weak,mccarthy-right,bochvar"), kDivAllQ) == Truth::T);
  CHECK(eval("x/y = 2", lpmd, kDivAllQ, {{"x", Element::rational(4)}, {"y", Element::rational(2)}}) == Truth::T);
  CHECK_THROWS_AS(eval("x = 1", lpmd, kDivAllQ), UnboundVariable);
}

TEST_CASE("quantifier families") {
  auto kleene = cfg("weak,kleene,kleene");
  auto bochvar = cfg("weak,kleene,bochvar");
  CHECK(eval("forall x. x/x = 1", kleene, kDivAllF7) == Truth::U);
  CHECK(eval("exists x. x/x = 1", kleene, kDivAllF7) == Truth::T);
  CHECK(eval("forall x. x/x = 1", bochvar, kDivAllF7) == Truth::U);
  CHECK(eval("exists x. x/x = 1", bochvar, kDivAllF7) == Truth::U);

  StructureSpec inv7{Carrier::prime_field(7), Mode::PunchInv0};
  CHECK(eval("forall x. x != 0 => x*x^-1 = 1", LogicConfig::lpmd(), inv7) == Truth::T);
  CHECK(eval("forall x. x != 0 => x/x = 1", LogicConfig::lpmd(), kDivAllF7) == Truth::T);

  // Oracle by instance enumeration over GF(3) with 0/0 undefined:
  // x=0 gives U, x=1 and x=2 give 1 = 0, i.e. F.
  StructureSpec f3{Carrier::prime_field(3), Mode::PunchDivAll0};
  std::vector<Truth> instances;
  for (const auto& e : f3.carrier.elements()) {
    instances.push_back(eval_equality(parse_term("x/x"), parse_term("0"), EqualityKind::Weak, {{"x", e}}, f3));
  }
  REQUIRE(instances == std::vector<Truth>{Truth::U, Truth::F, Truth::F});
  CHECK(eval("forall x. x/x = 0", kleene, f3) == Truth::F);
  CHECK(eval("forall x. x/x = 0", bochvar, f3) == Truth::U);

  CHECK_THROWS_AS(eval("forall x. x = x", kleene, kDivAllQ), DomainError);
}

TEST_CASE("probe sets make quantifiers range over a finite list") {
  StructureSpec probes{Carrier::probe_set({Rational(0), Rational(1), Rational::normalize(1, 2)}), Mode::PunchDivAll0};
  CHECK(eval("exists x. x/x = 1", cfg("weak,kleene,kleene"), probes) == Truth::T);
  CHECK(eval("forall x. x*2 > x", cfg("weak,kleene,kleene"), probes) == Truth::F);
  CHECK(eval("exists x. x*2 > x", cfg("weak,kleene,kleene"), probes) == Truth::T);
}

TEST_CASE("ordering atoms") {
  auto lpmd = LogicConfig::lpmd();
  CHECK(eval("1/2 > 1/3", lpmd, kDivAllQ) == Truth::T);
  CHECK(eval("1/2 < 1/3", lpmd, kDivAllQ) == Truth::F);
  CHECK(eval("1/0 > 0", lpmd, kDivAllQ) == Truth::U);
  CHECK(eval("1/0 > 0", cfg("strong,kleene,kleene"), kDivAllQ) == Truth::F);
  CHECK(eval("1/0 < 0", cfg("existential,kleene,kleene"), kDivAllQ) == Truth::F);
  CHECK_THROWS_AS(eval("1 > 0", lpmd, kDivAllF7), DomainError);
}

TEST_CASE("classify_sentence") {
  auto lpmd = LogicConfig::lpmd();
  CHECK(to_string(classify_sentence(parse_formula("0 != 0 => 0/0 = 1"), lpmd, kDivAllQ)) == "USABLE(T)");
  CHECK(to_string(classify_sentence(parse_formula("0/0 = 1 | 0 = 0"), lpmd, kDivAllQ)) == "UNUSABLE");
  CHECK(to_string(classify_sentence(parse_formula("1 = 1"), lpmd, kDivAllQ)) == "USABLE(T)");
  CHECK(to_string(classify_sentence(parse_formula("1 = 0"), lpmd, kDivAllQ)) == "USABLE(F)");
  CHECK_THROWS_AS(classify_sentence(parse_formula("x = 1"), lpmd, kDivAllQ), std::invalid_argument);
}

TEST_CASE("logic configuration strings") {
  CHECK(LogicConfig::parse("lpmd") == LogicConfig{EqualityKind::Weak, ConnectiveFamily::McCarthyLeft,
                                                  QuantifierFamily::Bochvar});
  CHECK(LogicConfig::parse("strong,mccarthy-right,kleene").name() == "strong,mccarthy-right,kleene");
  CHECK_THROWS(LogicConfig::parse("weak,kleene"));
  CHECK_THROWS(LogicConfig::parse("weak,lukasiewicz,kleene"));
}

TEST_CASE("every configuration is classical on division-free formulas") {
  std::mt19937_64 rng(40);
  testing::FormulaShape shape;
  shape.terms.allow_div = false;
  shape.terms.allow_inv = false;
  for (int i = 0; i < 150; ++i) {
    Formula f = testing::close_formula(rng, testing::random_formula(rng, shape));
    for (std::uint32_t p : {2u, 3u}) {
      for (Mode m : {Mode::Total, Mode::PunchDivAll0, Mode::PunchInv0}) {
        StructureSpec s{Carrier::prime_field(p), m};
        Truth expected = truth_of(classical_holds(f, {}, s));
        for (const auto& c : oracle::all_configs()) REQUIRE(eval_formula(f, c, {}, s) == expected);
      }
    }
  }
}

TEST_CASE("Bochvar connectives and quantifiers are strict on random formulas") {
  std::mt19937_64 rng(41);
  testing::FormulaShape shape;
  StructureSpec s{Carrier::prime_field(3), Mode::PunchDivAll0};
  LogicConfig strict{EqualityKind::Weak, ConnectiveFamily::Bochvar, QuantifierFamily::Bochvar};
  for (int i = 0; i < 300; ++i) {
    Formula f = testing::close_formula(rng, testing::random_formula(rng, shape));
    // Under weak equality and strict connectives a sentence is U iff some
    // atom instance reached during evaluation is U.
    bool any_u = false;
    std::function<void(const Formula&, Env)> scan = [&](const Formula& g, Env env) {
      if (g.kind() == FormulaKind::Eq) {
        if (eval_equality(g.left_term(), g.right_term(), EqualityKind::Weak, env, s) == Truth::U) any_u = true;
        return;
      }
      if (g.is_quantifier()) {
        for (const auto& e : s.carrier.elements()) {
          env.insert_or_assign(g.bound_var(), e);
          scan(g.body(), env);
        }
        return;
      }
      if (g.kind() == FormulaKind::Not) return scan(g.operand(), env);
      scan(g.lhs(), env);
      scan(g.rhs(), env);
    };
    scan(f, {});
    REQUIRE((eval_formula(f, strict, {}, s) == Truth::U) == any_u);
  }
}

TEST_CASE("Kleene quantifiers are the fold of Kleene conjunction in any order") {
  // Every instance list of length <= 4, every permutation.
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> digits(n, 0);
    while (true) {
      std::vector<Truth> values;
      for (int d : digits) values.push_back(kAll[d]);
      auto expect_all = [&] {
        bool f = std::count(values.begin(), values.end(), Truth::F) > 0;
        bool u = std::count(values.begin(), values.end(), Truth::U) > 0;
        return f ? Truth::F : u ? Truth::U : Truth::T;
      }();
      std::vector<int> order(n);
      for (int i = 0; i < n; ++i) order[i] = i;
      do {
        Truth acc = Truth::T;
        Truth acc_b = Truth::T;
        for (int i : order) {
          acc = conj(ConnectiveFamily::Kleene, acc, values[i]);
          acc_b = conj(ConnectiveFamily::Bochvar, acc_b, values[i]);
        }
        REQUIRE(acc == expect_all);
        bool any_u = std::count(values.begin(), values.end(), Truth::U) > 0;
        REQUIRE(acc_b == (any_u ? Truth::U : expect_all));
      } while (std::next_permutation(order.begin(), order.end()));
      int i = 0;
      while (i < n && ++digits[i] == 3) digits[i++] = 0;
      if (i == n) break;
    }
  }

  // The evaluator agrees with the fold over an actual carrier.
  StructureSpec f5{Carrier::prime_field(5), Mode::PunchDivAll0};
  for (const char* body : {"x/x = 1", "x/(x - 1) = 2", "x*x = 4", "(x - 2)/(x - 2) = 1 | x = 2"}) {
    auto f = parse_formula(std::string("forall x. ") + body);
    Truth fold = Truth::T;
    for (const auto& e : f5.carrier.elements()) {
      fold = conj(ConnectiveFamily::Kleene, fold, eval_formula(f.body(), cfg("weak,kleene,kleene"), {{"x", e}}, f5));
    }
    CHECK(eval_formula(f, cfg("weak,kleene,kleene"), {}, f5) == fold);
  }
}

TEST_CASE("eval_formula agrees with the brute-force oracle on random sentences") {
  std::mt19937_64 rng(42);
  testing::FormulaShape shape;
  for (int i = 0; i < 60; ++i) {
    Formula f = testing::close_formula(rng, testing::random_formula(rng, shape));
    for (long p : {2L, 3L, 5L}) {
      for (Mode m : {Mode::Total, Mode::PunchInv0, Mode::PunchDivAll0, Mode::PunchDivNonzero0}) {
        StructureSpec s{Carrier::prime_field(static_cast<std::uint32_t>(p)), m};
        for (const auto& c : oracle::all_configs()) {
          oracle::Evaluator ref(p, m, c);
          REQUIRE(eval_formula(f, c, {}, s) == oracle::to_truth(ref.formula(f, {})));
        }
      }
    }
  }
}
