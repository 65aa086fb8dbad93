#ifndef MEADOW_AXIOMS_HPP
#define MEADOW_AXIOMS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "meadow/formula.hpp"
#include "meadow/semantics.hpp"

namespace meadow {

/// Every assignment of the law's variables over a finite carrier.
struct Exhaustive {};

/// `count` seeded random assignments. Over the rationals each value has
/// numerator and denominator uniform in [-9999, 9999] (denominator != 0);
/// over finite carriers values are drawn uniformly from the elements.
struct RandomSample {
  std::size_t count = 1000;
  std::uint64_t seed = 0;
};

using Strategy = std::variant<Exhaustive, RandomSample>;

struct AxiomReport {
  std::string name;
  Formula law;
  bool passed = true;
  std::size_t samples = 0;
  std::optional<Env> witness;

  /// `PASS|FAIL axiom=<law> samples=<n> [witness=<env>]`
  std::string line() const;
};

/// Checks a quantifier-free law, reading its free variables universally and
/// its connectives classically, in the total structure over s.carrier.
/// Stops at the first counterexample. Throws DomainError for Exhaustive over
/// the rationals.
AxiomReport verify_law(const Formula& law, const StructureSpec& s, const Strategy& strategy,
                       std::string name = {});

/// lhs = rhs, or guard => lhs = rhs when a guard is given.
AxiomReport verify_axiom(const Term& lhs, const Term& rhs, const StructureSpec& s, const Strategy& strategy,
                         const std::optional<Formula>& guard = std::nullopt);

struct CatalogEntry {
  std::string name;
  Formula law;
};

/// The commutative ring axioms, the inversive and divisive meadow axioms,
/// separation, and the general inverse/division law (15 entries).
const std::vector<CatalogEntry>& axiom_catalog();

std::vector<AxiomReport> verify_catalog(const StructureSpec& s, const Strategy& strategy);

/// Draws one rational from the sampling distribution described above.
Rational sample_rational(std::mt19937_64& rng);

}  // namespace meadow

#endif
