#include "meadow/axioms.hpp"

#include <stdexcept>

#include "meadow/errors.hpp"
#include "meadow/parser.hpp"
#include "meadow/printer.hpp"

namespace meadow {

std::string AxiomReport::line() const {
  std::string out = passed ? "PASS" : "FAIL";
  out += " axiom=" + print_formula(law);
  out += " samples=" + std::to_string(samples);
  if (witness) out += " witness=" + format_env(*witness);
  return out;
}

Rational sample_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-9999, 9999);
  long num = dist(rng);
  long den = 0;
  while (den == 0) den = dist(rng);
  return Rational::normalize(num, den);
}

namespace {

std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

AxiomReport verify_law(const Formula& law, const StructureSpec& s, const Strategy& strategy, std::string name) {
  if (has_quantifier(law)) throw DomainError("laws are quantifier-free; free variables are read universally");
  AxiomReport report{std::move(name), law, true, 0, std::nullopt};
  auto vars = free_vars(law);
  std::vector<std::string> names(vars.begin(), vars.end());

  auto check = [&](const Env& env) {
    ++report.samples;
    if (!holds_classically(law, env, s)) {
      report.passed = false;
      report.witness = env;
    }
    return report.passed;
  };

  if (std::holds_alternative<Exhaustive>(strategy)) {
    auto elements = s.carrier.elements();
    std::vector<std::size_t> digits(names.size(), 0);
    while (true) {
      Env env;
      for (std::size_t i = 0; i < names.size(); ++i) env.emplace(names[i], elements[digits[i]]);
      if (!check(env)) break;
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == elements.size()) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    return report;
  }

  const auto& sampling = std::get<RandomSample>(strategy);
  std::vector<Element> pool;
  if (s.carrier.enumerable()) pool = s.carrier.elements();
  for (std::size_t n = 0; n < sampling.count; ++n) {
    auto rng = sample_rng(sampling.seed, n);
    Env env;
    for (const auto& v : names) {
      if (pool.empty()) {
        env.emplace(v, Element::rational(sample_rational(rng)));
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        env.emplace(v, pool[pick(rng)]);
      }
    }
    if (!check(env)) break;
  }
  return report;
}

AxiomReport verify_axiom(const Term& lhs, const Term& rhs, const StructureSpec& s, const Strategy& strategy,
                         const std::optional<Formula>& guard) {
  Formula law = Formula::eq(lhs, rhs);
  if (guard) law = Formula::implies(*guard, law);
  return verify_law(law, s, strategy);
}

const std::vector<CatalogEntry>& axiom_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    const std::pair<const char*, const char*> laws[] = {
        {"add-assoc", "(x + y) + z = x + (y + z)"},
        {"add-comm", "x + y = y + x"},
        {"add-zero", "x + 0 = x"},
        {"add-inverse", "x + (-x) = 0"},
        {"mul-assoc", "(x*y)*z = x*(y*z)"},
        {"mul-comm", "x*y = y*x"},
        {"mul-one", "x*1 = x"},
        {"distrib", "x*(y + z) = x*y + x*z"},
        {"inv-involution", "(x^-1)^-1 = x"},
        {"inv-restricted", "x*(x*x^-1) = x"},
        {"div-involution", "1/(1/x) = x"},
        {"div-restricted", "(x*x)/x = x"},
        {"div-as-mul", "x/y = x*(1/y)"},
        {"separation", "0 != 1"},
        {"general-inverse-division", "x != 0 => x*x^-1 = 1 & x/x = 1"},
    };
    std::vector<CatalogEntry> out;
    for (const auto& [name, text] : laws) out.push_back({name, parse_formula(text)});
    return out;
  }();
  return catalog;
}

std::vector<AxiomReport> verify_catalog(const StructureSpec& s, const Strategy& strategy) {
  std::vector<AxiomReport> out;
  for (const auto& entry : axiom_catalog()) out.push_back(verify_law(entry.law, s, strategy, entry.name));
  return out;
}

}  // namespace meadow
