#ifndef MEADOW_CARRIER_HPP
#define MEADOW_CARRIER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "meadow/rational.hpp"

namespace meadow {

/// An element of some carrier: an exact rational tagged with the modulus of
/// the prime field it lives in, or modulus 0 for the rationals.
///
/// Prime-field elements are stored as integers in [0, p).
class Element {
 public:
  Element() = default;
  static Element rational(Rational q) { return Element(std::move(q), 0); }
  /// Reduces `value` into [0, p).
  static Element modular(const mpz_class& value, std::uint32_t p);

  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t modulus() const { return modulus_; }
  const Rational& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  std::string str() const { return value_.str(); }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Element(Rational q, std::uint32_t modulus) : value_(std::move(q)), modulus_(modulus) {}

  Rational value_;
  std::uint32_t modulus_ = 0;
};

/// The domain a structure is built on.
///
///  - Rationals: Q, not enumerable.
///  - PrimeField(p): GF(p) with p prime, enumerable as 0..p-1.
///  - FiniteProbeSet: rational arithmetic, but quantifiers range over a fixed
///    non-empty, duplicate-free list of rationals.
class Carrier {
 public:
  enum class Kind { Rationals, PrimeField, FiniteProbeSet };

  Carrier() = default;
  static Carrier rationals() { return Carrier(); }
  /// Throws std::invalid_argument unless p is prime.
  static Carrier prime_field(std::uint32_t p);
  /// Throws std::invalid_argument on an empty list or duplicates.
  static Carrier probe_set(std::vector<Rational> probes);

  /// Accepts `rationals`, `gf<p>` and `probe:<q>,<q>,...`.
  static Carrier parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool enumerable() const { return kind_ != Kind::Rationals; }
  /// p for PrimeField, 0 otherwise.
  std::uint32_t modulus() const { return modulus_; }
  const std::vector<Rational>& probes() const { return probes_; }

  /// All elements in canonical order. Throws DomainError on Rationals.
  std::vector<Element> elements() const;
  std::size_t size() const;

  bool contains(const Element& e) const;

  /// Image of an integer numeral: n itself over Q, n mod p over GF(p).
  Element from_integer(const mpz_class& n) const;
  /// Throws CarrierMismatch for a non-integer rational over GF(p).
  Element from_rational(const Rational& q) const;
  Element zero() const { return from_integer(0); }
  Element one() const { return from_integer(1); }

  std::string name() const;

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  Kind kind_ = Kind::Rationals;
  std::uint32_t modulus_ = 0;
  std::vector<Rational> probes_;
};

Element add(const Element& a, const Element& b, const Carrier& c);
Element mul(const Element& a, const Element& b, const Carrier& c);
Element neg(const Element& a, const Carrier& c);

/// Multiplicative inverse made total: the inverse of zero is zero.
Element inv_total(const Element& a, const Carrier& c);

/// a * inv_total(b); in particular a / 0 = 0.
Element div_total(const Element& a, const Element& b, const Carrier& c);

}  // namespace meadow

#endif
