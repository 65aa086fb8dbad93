#include "meadow/carrier.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "meadow/errors.hpp"

namespace meadow {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_member(const Element& e, const Carrier& c) {
  if (!c.contains(e)) {
    throw CarrierMismatch("element " + e.str() + (e.is_rational() ? "" : " (mod " + std::to_string(e.modulus()) + ")") +
                          " does not belong to carrier " + c.name());
  }
}

Element reduce(const mpz_class& v, const Carrier& c) { return c.from_integer(v); }

}  // namespace

Element Element::modular(const mpz_class& value, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return Element(Rational(std::move(r)), p);
}

Carrier Carrier::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  Carrier c;
  c.kind_ = Kind::PrimeField;
  c.modulus_ = p;
  return c;
}

Carrier Carrier::probe_set(std::vector<Rational> probes) {
  if (probes.empty()) throw std::invalid_argument("probe set must be non-empty");
  std::vector<Rational> sorted = probes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("probe set contains duplicates");
  }
  Carrier c;
  c.kind_ = Kind::FiniteProbeSet;
  c.probes_ = std::move(probes);
  return c;
}

Carrier Carrier::parse(std::string_view text) {
  if (text == "rationals" || text == "q") return rationals();
  if (text.starts_with("gf")) {
    std::uint32_t p = 0;
    auto digits = text.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw std::invalid_argument("bad prime field '" + std::string(text) + "'");
    }
    return prime_field(p);
  }
  if (text.starts_with("probe:")) {
    std::vector<Rational> probes;
    auto rest = text.substr(6);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      probes.push_back(Rational::parse(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return probe_set(std::move(probes));
  }
  throw std::invalid_argument("unknown carrier '" + std::string(text) + "'");
}

std::vector<Element> Carrier::elements() const {
  std::vector<Element> out;
  switch (kind_) {
    case Kind::Rationals:
      throw DomainError("the rationals cannot be enumerated");
    case Kind::PrimeField:
      out.reserve(modulus_);
      for (std::uint32_t i = 0; i < modulus_; ++i) out.push_back(Element::modular(i, modulus_));
      break;
    case Kind::FiniteProbeSet:
      for (const auto& q : probes_) out.push_back(Element::rational(q));
      break;
  }
  return out;
}

std::size_t Carrier::size() const {
  switch (kind_) {
    case Kind::PrimeField: return modulus_;
    case Kind::FiniteProbeSet: return probes_.size();
    case Kind::Rationals: break;
  }
  throw DomainError("the rationals cannot be enumerated");
}

bool Carrier::contains(const Element& e) const {
  if (kind_ != Kind::PrimeField) return e.is_rational();
  return e.modulus() == modulus_ && e.value().is_integer() && e.value().sign() >= 0 &&
         e.value().num() < modulus_;
}

Element Carrier::from_integer(const mpz_class& n) const {
  if (kind_ == Kind::PrimeField) return Element::modular(n, modulus_);
  return Element::rational(Rational(n));
}

Element Carrier::from_rational(const Rational& q) const {
  if (kind_ != Kind::PrimeField) return Element::rational(q);
  if (!q.is_integer()) throw CarrierMismatch("non-integer " + q.str() + " in " + name());
  return Element::modular(q.num(), modulus_);
}

std::string Carrier::name() const {
  switch (kind_) {
    case Kind::Rationals: return "rationals";
    case Kind::PrimeField: return "gf" + std::to_string(modulus_);
    case Kind::FiniteProbeSet: {
      std::string s = "probe:";
      for (std::size_t i = 0; i < probes_.size(); ++i) {
        if (i) s += ',';
        s += probes_[i].str();
      }
      return s;
    }
  }
  return {};
}

Element add(const Element& a, const Element& b, const Carrier& c) {
  require_member(a, c);
  require_member(b, c);
  if (c.kind() == Carrier::Kind::PrimeField) return reduce(a.value().num() + b.value().num(), c);
  return Element::rational(a.value() + b.value());
}

Element mul(const Element& a, const Element& b, const Carrier& c) {
  require_member(a, c);
  require_member(b, c);
  if (c.kind() == Carrier::Kind::PrimeField) return reduce(a.value().num() * b.value().num(), c);
  return Element::rational(a.value() * b.value());
}

Element neg(const Element& a, const Carrier& c) {
  require_member(a, c);
  if (c.kind() == Carrier::Kind::PrimeField) return reduce(-a.value().num(), c);
  return Element::rational(-a.value());
}

Element inv_total(const Element& a, const Carrier& c) {
  require_member(a, c);
  if (a.is_zero()) return a;
  if (c.kind() == Carrier::Kind::PrimeField) {
    mpz_class r;
    mpz_class p(c.modulus());
    mpz_invert(r.get_mpz_t(), a.value().num().get_mpz_t(), p.get_mpz_t());
    return reduce(r, c);
  }
  return Element::rational(a.value().reciprocal());
}

Element div_total(const Element& a, const Element& b, const Carrier& c) {
  return mul(a, inv_total(b, c), c);
}

}  // namespace meadow
