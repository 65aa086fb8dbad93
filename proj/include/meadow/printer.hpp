#ifndef MEADOW_PRINTER_HPP
#define MEADOW_PRINTER_HPP

#include <ostream>
#include <string>

#include "meadow/formula.hpp"
#include "meadow/term.hpp"

namespace meadow {

/// Prints with the minimum parentheses needed for parse_term to rebuild the
/// same tree. Add(a, Neg(b)) prints as `a - b`.
std::string print_term(const Term& t);
std::string print_formula(const Formula& f);

inline std::ostream& operator<<(std::ostream& os, const Term& t) { return os << print_term(t); }
inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << print_formula(f); }

}  // namespace meadow

#endif
