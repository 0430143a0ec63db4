#ifndef NCALG_DIVISION_HPP
#define NCALG_DIVISION_HPP

#include "ncalg/ncpoly.hpp"

#include <vector>

namespace ncalg {

/// d(x) = p1 o x + p0, where p1 o x = sum p1[i,j] e_i x e_j.
struct LinearDivisor {
    CoeffTensor p1;
    Element p0;

    /// x - c
    static LinearDivisor monic(const Element& c);
    /// Reads p1 and p0 from a polynomial of degree exactly 1.
    static LinearDivisor from_polynomial(const NcPolynomial& d);

    NcPolynomial as_polynomial() const;
};

struct QuotientTerm {
    Monomial prefix;
    Element right;
};

/// r = sum prefix_i(x) d(x) right_i + remainder
struct DivisionResult {
    std::vector<QuotientTerm> quotient_terms;
    Element remainder;
};

/*
 * Divides by a linear divisor, peeling the rightmost x of each top-degree
 * monomial:
 *   a_0 x .. a_{k-1} x a_k = [a_0 x .. x a_{k-1}] (x - c) a_k + [a_0 x .. x (a_{k-1} c a_k)]
 * A non-monic divisor is first reduced to x - c through the inverse of the
 * operator x -> p1 o x; the inverse must itself be a degree-1 tensor, and
 * its factors are folded into the quotient terms.
 *
 * Throws DivisorNotInvertible or DivisorInverseNotRepresentable.
 */
DivisionResult divide_linear(const NcPolynomial& r, const LinearDivisor& divisor);

/// sum prefix_i(x) d(x) right_i + remainder
NcPolynomial recompose(const DivisionResult& result, const LinearDivisor& divisor);

} // namespace ncalg

#endif
