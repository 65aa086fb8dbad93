#include "meadow/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "meadow/errors.hpp"

namespace meadow {

namespace {

enum class Tok {
  Ident, Nat, Plus, Minus, Star, Slash, Caret, LParen, RParen,
  Eq, Neq, Gt, Lt, Bang, Amp, Bar, Arrow, Dot, Forall, Exists, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(src.substr(i, len)), i});
    i += len;
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      push(Tok::Nat, j - i);
      continue;
    }
    if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      auto word = src.substr(i, j - i);
      push(word == "forall" ? Tok::Forall : word == "exists" ? Tok::Exists : Tok::Ident, j - i);
      continue;
    }
    char next = i + 1 < src.size() ? src[i + 1] : '\0';
    switch (c) {
      case '+': push(Tok::Plus, 1); break;
      case '-': push(Tok::Minus, 1); break;
      case '*': push(Tok::Star, 1); break;
      case '/': push(Tok::Slash, 1); break;
      case '^': push(Tok::Caret, 1); break;
      case '(': push(Tok::LParen, 1); break;
      case ')': push(Tok::RParen, 1); break;
      case '>': push(Tok::Gt, 1); break;
      case '<': push(Tok::Lt, 1); break;
      case '&': push(Tok::Amp, 1); break;
      case '|': push(Tok::Bar, 1); break;
      case '.': push(Tok::Dot, 1); break;
      case '=':
        if (next == '>') push(Tok::Arrow, 2);
        else push(Tok::Eq, 1);
        break;
      case '!':
        if (next == '=') push(Tok::Neq, 2);
        else push(Tok::Bang, 1);
        break;
      default:
        throw SyntaxError(std::string("unexpected character '") + static_cast<char>(c) + "'", i);
    }
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Term whole_term() {
    Term t = sum();
    expect(Tok::End, "end of input");
    return t;
  }

  Formula whole_formula() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& advance() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& wanted) const {
    throw SyntaxError("expected " + wanted + ", found " + describe(peek()), peek().pos);
  }

  const Token& expect(Tok k, const std::string& wanted) {
    if (!at(k)) fail(wanted);
    return advance();
  }

  Term sum() {
    Term t = prod();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      bool minus = advance().kind == Tok::Minus;
      Term r = prod();
      t = Term::add(std::move(t), minus ? Term::neg(std::move(r)) : std::move(r));
    }
    return t;
  }

  Term prod() {
    Term t = unary();
    while (at(Tok::Star) || at(Tok::Slash)) {
      bool slash = advance().kind == Tok::Slash;
      Term r = unary();
      t = slash ? Term::div(std::move(t), std::move(r)) : Term::mul(std::move(t), std::move(r));
    }
    return t;
  }

  Term unary() {
    if (at(Tok::Minus)) {
      advance();
      return Term::neg(unary());
    }
    return postfix();
  }

  Term postfix() {
    Term t = atom();
    while (at(Tok::Caret)) {
      advance();
      if (at(Tok::Minus)) {
        advance();
        if (!at(Tok::Nat) || peek().text != "1") fail("'1' after '^-'");
        advance();
        t = Term::inv(std::move(t));
        continue;
      }
      if (!at(Tok::Nat)) fail("exponent");
      const Token& e = advance();
      mpz_class n(e.text);
      if (n == 0) throw SyntaxError("exponent must be at least 1", e.pos);
      if (n > 64) throw SyntaxError("exponent too large", e.pos);
      Term base = t;
      for (unsigned long k = 1; k < n.get_ui(); ++k) t = Term::mul(std::move(t), base);
    }
    return t;
  }

  Term atom() {
    if (at(Tok::Nat)) return Term::num(mpz_class(advance().text));
    if (at(Tok::Ident)) return Term::var(advance().text);
    if (at(Tok::LParen)) {
      advance();
      Term t = sum();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("term");
  }

  Formula formula() {
    if (at(Tok::Forall) || at(Tok::Exists)) {
      bool universal = advance().kind == Tok::Forall;
      std::string var = expect(Tok::Ident, "variable").text;
      expect(Tok::Dot, "'.'");
      Formula body = formula();
      return universal ? Formula::forall(std::move(var), std::move(body))
                       : Formula::exists(std::move(var), std::move(body));
    }
    return impl();
  }

  Formula impl() {
    Formula a = disj();
    if (at(Tok::Arrow)) {
      advance();
      return Formula::implies(std::move(a), impl());
    }
    return a;
  }

  Formula disj() {
    Formula a = conj();
    while (at(Tok::Bar)) {
      advance();
      a = Formula::disj(std::move(a), conj());
    }
    return a;
  }

  Formula conj() {
    Formula a = neg();
    while (at(Tok::Amp)) {
      advance();
      a = Formula::conj(std::move(a), neg());
    }
    return a;
  }

  Formula neg() {
    if (at(Tok::Bang)) {
      advance();
      return Formula::negation(neg());
    }
    return fatom();
  }

  // A leading '(' may open either a term or a parenthesized formula; try the
  // comparison first and fall back, reporting whichever error got further.
  Formula fatom() {
    std::size_t start = pos_;
    try {
      return comparison();
    } catch (const SyntaxError& as_comparison) {
      if (toks_[start].kind != Tok::LParen) throw;
      pos_ = start;
      try {
        advance();
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      } catch (const SyntaxError& as_group) {
        if (as_group.position() >= as_comparison.position()) throw;
        throw as_comparison;
      }
    }
  }

  Formula comparison() {
    Term a = sum();
    Tok op = peek().kind;
    if (op != Tok::Eq && op != Tok::Neq && op != Tok::Gt && op != Tok::Lt) fail("'=', '!=', '>' or '<'");
    advance();
    Term b = sum();
    switch (op) {
      case Tok::Eq: return Formula::eq(std::move(a), std::move(b));
      case Tok::Neq: return Formula::neq(std::move(a), std::move(b));
      case Tok::Gt: return Formula::gt(std::move(a), std::move(b));
      default: return Formula::lt(std::move(a), std::move(b));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).whole_term(); }

Formula parse_formula(std::string_view text) { return Parser(text).whole_formula(); }

}  // namespace meadow
