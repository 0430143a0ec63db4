#include "ncalg/division.hpp"

#include "ncalg/errors.hpp"
#include "ncalg/linalg.hpp"

namespace ncalg {

LinearDivisor LinearDivisor::monic(const Element& c) {
    const Algebra& alg = c.algebra();
    const auto unit = alg->unit_index();
    if (!unit) throw MissingUnit("monic divisor x - c needs a unit");
    CoeffTensor p1(alg->dim(), 1);
    p1[*unit * alg->dim() + *unit] = Scalar(1);
    return {std::move(p1), -c};
}

LinearDivisor LinearDivisor::from_polynomial(const NcPolynomial& d) {
    if (d.degree() != 1) throw DomainError("divisor must have degree 1, got " + std::to_string(d.degree()));
    const CoeffTensor t0 = d.canonical_tensor(0);
    return {d.canonical_tensor(1), Element(d.algebra(), t0.data())};
}

NcPolynomial LinearDivisor::as_polynomial() const {
    const Algebra& alg = p0.algebra();
    return NcPolynomial::from_tensor(alg, p1) + NcPolynomial::constant(p0);
}

namespace {

// Applies the operator x -> sum T[i,j] e_i x e_j.
Element apply_tensor(const CoeffTensor& t, const Element& x) {
    const Algebra& alg = x.algebra();
    const std::size_t n = alg->dim();
    Element out = Element::zero(alg);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (const Scalar& w = t[i * n + j]; !w.is_zero())
                out += mul(mul(Element::basis(alg, i), x), Element::basis(alg, j)) * w;
    return out;
}

void peel_monic(const NcPolynomial& r, const Element& c, DivisionResult& out) {
    std::vector<Monomial> pool;
    for (const auto& m : r.monomials())
        if (!m.has_zero_coeff()) pool.push_back(m);

    std::size_t top = 0;
    for (const auto& m : pool) top = std::max(top, m.degree());

    for (std::size_t k = top; k >= 1; --k) {
        std::vector<Monomial> next;
        for (auto& m : pool) {
            if (m.degree() != k) {
                next.push_back(std::move(m));
                continue;
            }
            const auto& a = m.coeffs();
            std::vector<Element> prefix(a.begin(), a.end() - 1);
            out.quotient_terms.push_back({Monomial(prefix), a.back()});

            prefix.back() = mul(mul(prefix.back(), c), a.back());
            Monomial reduced(std::move(prefix));
            if (!reduced.has_zero_coeff()) next.push_back(std::move(reduced));
        }
        pool = std::move(next);
    }
    for (const auto& m : pool) out.remainder += m.coeffs().front();
}

} // namespace

DivisionResult divide_linear(const NcPolynomial& r, const LinearDivisor& divisor) {
    const Algebra& alg = r.algebra();
    if (!same_algebra(alg, divisor.p0.algebra())) throw AlgebraMismatch();
    const std::size_t n = alg->dim();
    if (divisor.p1.dim() != n || divisor.p1.degree() != 1) throw ShapeError("divisor tensor must be n x n");

    DivisionResult result{{}, Element::zero(alg)};

    const auto unit = alg->unit_index();
    if (!unit) throw MissingUnit("division needs an algebra with unit");
    if (divisor.p1 == LinearDivisor::monic(Element::zero(alg)).p1) {
        peel_monic(r, -divisor.p0, result);
        return result;
    }

    // Operator matrix of x -> p1 o x, column m = image of e_m.
    Matrix op(n, n);
    for (std::size_t m = 0; m < n; ++m) {
        const Element img = apply_tensor(divisor.p1, Element::basis(alg, m));
        for (std::size_t p = 0; p < n; ++p) op(p, m) = img[p];
    }
    if (!inverse(op)) throw DivisorNotInvertible("leading tensor of the divisor is singular as an operator on the algebra");

    // Tensor inverse in A (x) A^op: sum S[i,j] T[a,b] (e_i e_a) (x) (e_b e_j) = 1 (x) 1.
    // Over central simple algebras this always exists once the operator is
    // invertible; over e.g. C (x) C it can be a zero divisor.
    const std::size_t u1 = *unit;
    Matrix system(n * n, n * n);
    std::vector<Scalar> rhs(n * n);
    rhs[u1 * n + u1] = Scalar(1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const Scalar& t = divisor.p1[a * n + b];
                    if (t.is_zero()) continue;
                    const Element left = mul(Element::basis(alg, i), Element::basis(alg, a));
                    const Element right = mul(Element::basis(alg, b), Element::basis(alg, j));
                    for (std::size_t u = 0; u < n; ++u) {
                        if (left[u].is_zero()) continue;
                        for (std::size_t v = 0; v < n; ++v)
                            if (!right[v].is_zero()) system(u * n + v, i * n + j) += t * left[u] * right[v];
                    }
                }
    const LinearSolution sol = solve_linear(system, rhs);
    if (!sol.consistent)
        throw DivisorInverseNotRepresentable(
            "leading tensor of the divisor has no inverse tensor sum s_ij e_i (x) e_j in this algebra");
    const CoeffTensor s(n, 1, sol.particular);

    // sum S[i,j] e_i d(x) e_j = x - c with c = -(S o p0).
    const Element c = -apply_tensor(s, divisor.p0);

    DivisionResult monic{{}, Element::zero(alg)};
    peel_monic(r, c, monic);
    result.remainder = monic.remainder;
    for (const auto& term : monic.quotient_terms) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& w = s[i * n + j];
                if (w.is_zero()) continue;
                auto coeffs = term.prefix.coeffs();
                coeffs.back() = mul(coeffs.back(), Element::basis(alg, i) * w);
                result.quotient_terms.push_back({Monomial(std::move(coeffs)), mul(Element::basis(alg, j), term.right)});
            }
    }
    return result;
}

NcPolynomial recompose(const DivisionResult& result, const LinearDivisor& divisor) {
    const Algebra& alg = divisor.p0.algebra();
    const NcPolynomial d = divisor.as_polynomial();
    NcPolynomial acc = NcPolynomial::constant(result.remainder);
    for (const auto& term : result.quotient_terms)
        acc = acc + (NcPolynomial(alg, {term.prefix}) * d) * term.right;
    return acc;
}

} // namespace ncalg
