#ifndef MEADOW_LINT_HPP
#define MEADOW_LINT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "meadow/formula.hpp"
#include "meadow/semantics.hpp"

namespace meadow {

/// Inversive: q^-1 is not used with q = 0.
/// Division: p / q is not used with q = 0.
/// LiberalDivision: p / q is not used with q = 0 if p != 0.
///
/// Every inverse and division occurrence is checked under each convention;
/// q^-1 is read as 1/q and p/q as p*q^-1 where the notations differ.
enum class Convention { Inversive, Division, LiberalDivision };

Convention parse_convention(std::string_view text);
std::string convention_name(Convention c);

enum class StatementKind { Hypothesis, Claim };

struct Statement {
  std::size_t index = 0;
  StatementKind kind = StatementKind::Claim;
  Formula formula;
};

enum class OperatorKind { Div, Inv };

struct Occurrence {
  OperatorKind op;
  std::optional<Term> numerator;  // Div only
  Term guarded;                   // denominator, or the inverted term
  std::size_t pos;                // ordinal within the statement, document order
};

std::vector<Occurrence> collect_occurrences(const Term& t);
std::vector<Occurrence> collect_occurrences(const Formula& f);

enum class CertificateKind { NonzeroConstant, OnePlusSumOfSquares, ProductOfCertified, HypothesisDerived, ZeroNumerator };

struct Certificate {
  CertificateKind kind;
  /// Latest statement whose hypothesis the certificate leans on, if any.
  std::optional<std::size_t> hypothesis;

  /// e.g. `OnePlusSumOfSquares`, `HypothesisDerived(0)`.
  std::string str() const;
};

/// q is known to be nonzero since statement `statement`.
struct NonzeroFact {
  Term term;
  std::size_t statement;
};

/// Sound but incomplete nonzeroness proof over the rationals. Recognizes
///   - closed terms that evaluate to a nonzero constant;
///   - c + s1 + ... + sk with c > 0 constant and each si a square, i.e. a
///     product whose non-constant factors pair up, times a positive constant;
///   - products of certified factors;
///   - terms equal to a recorded fact up to reordering of + and *.
std::optional<Certificate> nonzero_certificate(const Term& t, const std::vector<NonzeroFact>& facts);

/// Sorts the operands of flattened + and * chains so that terms differing only
/// by commutativity and associativity compare equal.
Term normalize_ac(const Term& t);

struct WitnessBudget {
  std::vector<std::uint32_t> primes{2, 3, 5};
  long max_numerator = 4;
  long max_denominator = 4;
  std::size_t max_vars = 3;
};

/// Searches for an assignment making `t` zero over the rationals while every
/// term in `nonzero` stays nonzero. Candidates are all assignments over
/// GF(2), GF(3), GF(5) lifted to integers, then all rationals n/d with
/// |n| <= 4, 1 <= d <= 4. Each hit is re-checked with eval_total over Q.
/// Constraints in `nonzero` join the search only when they share a variable
/// with it; `required` terms always join and must stay nonzero too.
/// Returns nothing when the budget is exhausted or the terms mention more than
/// `max_vars` variables.
std::optional<Env> find_zero_witness(const Term& t, const WitnessBudget& budget = {},
                                     const std::vector<Term>& nonzero = {}, const std::vector<Term>& required = {});

enum class VerdictKind { Compliant, Violation, Unknown };

struct Verdict {
  std::size_t statement = 0;
  Occurrence occurrence;
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<Certificate> certificate;  // Compliant
  std::optional<Env> witness;              // Violation
  std::string reason;                      // Unknown

  std::string verdict_name() const;
  std::string detail() const;
  /// `statement=<i> pos=<p> guarded=<term> verdict=<V> detail=<d>`
  std::string line() const;
};

/// Hypotheses of the form t/q = c, t*q^-1 = c (c a nonzero constant, either
/// side) or q != 0 record q as nonzero. Facts serve later statements; a
/// certificate that needs a fact from the occurrence's own statement yields
/// Unknown("same-statement hypothesis"). Witnesses never falsify a fact.
std::vector<Verdict> lint(const std::vector<Statement>& corpus, Convention convention);

/// Nonzero facts a hypothesis contributes.
std::vector<NonzeroFact> hypothesis_facts(const Formula& f, std::size_t statement);

// Corpus files: one statement per line, `hyp: <formula>` or
// `claim: <formula>`; `#` starts a comment; blank lines are skipped.
std::vector<Statement> parse_corpus(std::string_view text);
/// Throws std::runtime_error if the file cannot be read.
std::vector<Statement> load_corpus(const std::string& path);

}  // namespace meadow

#endif
