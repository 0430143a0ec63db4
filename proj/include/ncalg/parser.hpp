#ifndef NCALG_PARSER_HPP
#define NCALG_PARSER_HPP

#include "ncalg/algebra.hpp"
#include "ncalg/ncpoly.hpp"

#include <string_view>

namespace ncalg {

/*
 * Polynomial expressions in one variable x over an algebra.
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := unary ('*' unary)*           noncommutative, left-associative
 *   unary   := ('+' | '-') unary | power
 *   power   := 'x' ('^' INT)? | primary
 *   primary := NUMBER LABEL? | LABEL | '(' expr ')' | '(' NUMBER (',' NUMBER)+ ')'
 *
 * LABEL is a basis label of the algebra ("i", "j", "e2", ...); a bare
 * NUMBER is that multiple of the unit. Numbers: 3, -3/4, 0.25, 1e-3.
 * A coordinate tuple must have exactly dim entries. Errors raise
 * ParseError with the 1-based line and column.
 */
NcPolynomial parse_polynomial(std::string_view text, const Algebra& algebra, Backend backend = Backend::Rational);

/// Same grammar; the result must not mention x.
Element parse_element(std::string_view text, const Algebra& algebra, Backend backend = Backend::Rational);

} // namespace ncalg

#endif
