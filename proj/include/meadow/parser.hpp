#ifndef MEADOW_PARSER_HPP
#define MEADOW_PARSER_HPP

#include <string_view>

#include "meadow/formula.hpp"
#include "meadow/term.hpp"

namespace meadow {

// ASCII surface syntax:
//
//   term    := sum ;
//   sum     := prod (("+"|"-") prod)* ;
//   prod    := unary (("*"|"/") unary)* ;
//   unary   := "-" unary | postfix ;
//   postfix := atom ("^-1" | "^" nat)* ;
//   atom    := "0" | "1" | nat | ident | "(" term ")" ;
//   formula := quant | impl ;
//   quant   := ("forall"|"exists") ident "." formula ;
//   impl    := disj ("=>" impl)? ;
//   disj    := conj ("|" conj)* ;
//   conj    := neg ("&" neg)* ;
//   neg     := "!" neg | fatom ;
//   fatom   := term ("="|"!="|">"|"<") term | "(" formula ")" ;
//
// Binary minus a - b parses as a + (-b). x^n (n >= 1) expands to the
// left-nested product x*x*...*x. Both parsers throw SyntaxError.

Term parse_term(std::string_view text);
Formula parse_formula(std::string_view text);

}  // namespace meadow

#endif
