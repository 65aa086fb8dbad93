#include "meadow/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "meadow/errors.hpp"

namespace meadow {

Rational Rational::normalize(mpz_class num, mpz_class den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
  return Rational(std::move(num), std::move(den), true);
}

namespace {

std::size_t scan_digits(std::string_view text, std::size_t i) {
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  return i;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  std::size_t end = scan_digits(text, i);
  if (end == i) throw SyntaxError("expected digits in rational '" + std::string(text) + "'", i);
  mpz_class num(std::string(text.substr(i, end - i)));
  mpz_class den(1);
  i = end;
  if (i < text.size() && text[i] == '/') {
    ++i;
    end = scan_digits(text, i);
    if (end == i) throw SyntaxError("expected denominator in rational '" + std::string(text) + "'", i);
    den = mpz_class(std::string(text.substr(i, end - i)));
    if (den == 0) throw SyntaxError("zero denominator in rational '" + std::string(text) + "'", i);
    i = end;
  }
  if (i != text.size()) throw SyntaxError("trailing characters in rational '" + std::string(text) + "'", i);
  if (negative) num = -num;
  return normalize(std::move(num), std::move(den));
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::operator-() const { return Rational(-num_, den_, true); }

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) return Rational(mpz_class(a.num_ + b.num_));
  return Rational::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) return Rational(mpz_class(a.num_ * b.num_));
  return Rational::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

Rational Rational::reciprocal() const {
  if (num_ == 0) throw std::domain_error("reciprocal of zero");
  return normalize(den_, num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace meadow
