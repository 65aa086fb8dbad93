#ifndef MEADOW_RATIONAL_HPP
#define MEADOW_RATIONAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace meadow {

/// Exact rational number in canonical form: the denominator is positive, the
/// numerator carries the sign, gcd(|num|, den) = 1, and zero is 0/1.
///
/// Division by a zero Rational throws; the totalized inverse and division of
/// the Komori field live in carrier.hpp, not here.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpz_class n) : num_(std::move(n)), den_(1) {}

  /// Canonicalizes num/den. Throws std::domain_error when den == 0.
  static Rational normalize(mpz_class num, mpz_class den);

  /// Parses `-?digits(/digits)?`. Throws SyntaxError on malformed input or a
  /// zero denominator.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  /// `num/den`, with `/den` omitted when den == 1.
  std::string str() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Field division; throws std::domain_error when b is zero.
  friend Rational operator/(const Rational& a, const Rational& b);

  /// Multiplicative inverse; throws std::domain_error on zero.
  Rational reciprocal() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Rational(mpz_class num, mpz_class den, bool /*already_canonical*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  mpz_class num_;
  mpz_class den_;
};

}  // namespace meadow

#endif
