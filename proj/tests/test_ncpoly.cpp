#include "ncalg/errors.hpp"
#include "ncalg/identities.hpp"
#include "ncalg/ncpoly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ncalg;

namespace {

struct Q {
    Algebra H = builtin_quaternion();
    Element one = Element::one(H);
    Element i = Element::basis(H, 1);
    Element j = Element::basis(H, 2);
    Element k = Element::basis(H, 3);
    NcPolynomial x = NcPolynomial::variable(H);
    NcPolynomial c(const Element& a) const { return NcPolynomial::constant(a); }
    NcPolynomial chain(std::vector<Element> coeffs) const { return NcPolynomial(H, {Monomial(std::move(coeffs))}); }
};

} // namespace

TEST(Tensor, OuterProductOfMonomial) {
    Q q;
    const Element a(q.H, {Scalar(1), Scalar(2), Scalar(0), Scalar(-1)});
    const Element b(q.H, {Scalar(0), Scalar(3), Scalar(1), Scalar(2)});
    const CoeffTensor t = CoeffTensor::of(Monomial({a, b}));
    ASSERT_EQ(t.size(), 16u);
    for (std::size_t p = 0; p < 4; ++p)
        for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(t.at({p, r}), a[p] * b[r]);
    const CoeffTensor ij = CoeffTensor::of(Monomial({q.i, q.j}));
    for (std::size_t f = 0; f < 16; ++f) EXPECT_EQ(ij[f], Scalar(f == 1 * 4 + 2 ? 1 : 0));
}

TEST(Tensor, Additivity) {
    Q q;
    const NcPolynomial p = q.chain({q.one, q.one}) + q.chain({q.one, q.one});
    CoeffTensor expected(4, 1);
    expected[0] = 2;
    EXPECT_EQ(p.canonical_tensor(1), expected);
}

TEST(Tensor, Cancellation) {
    Q q;
    const NcPolynomial p = q.chain({q.i, q.j}) + q.chain({-q.i, q.j});
    EXPECT_TRUE(p.canonical_tensor(1).is_zero());
    EXPECT_EQ(p.degree(), -1);
}

TEST(Tensor, Cap) {
    EXPECT_TRUE(CoeffTensor::fits(4, 6));
    EXPECT_FALSE(CoeffTensor::fits(4, 7));
    Q q;
    NcPolynomial p = q.x;
    for (int d = 1; d < 7; ++d) p = p * q.x;
    EXPECT_THROW(p.canonical_tensor(7), DegreeCapExceeded);
}

TEST(Mul, ProductOfLinearFactors) {
    Q q;
    const NcPolynomial p = (q.x - q.c(q.i)) * (q.x - q.c(q.j));
    const NcPolynomial expected = q.chain({q.one, q.one, q.one}) - q.chain({q.one, q.j}) - q.chain({q.i, q.one}) + q.c(q.k);
    EXPECT_EQ(p, expected);
    EXPECT_EQ(p * q.c(q.one), p);
    EXPECT_EQ(poly_mul(q.x - q.c(q.i), q.x - q.c(q.j)), expected);
}

TEST(Mul, MergesInnerCoefficients) {
    Q q;
    const Monomial m = Monomial({q.i, q.one}) * Monomial({q.j, q.k});
    ASSERT_EQ(m.degree(), 2u);
    EXPECT_EQ(m.coeffs()[0], q.i);
    EXPECT_EQ(m.coeffs()[1], q.j);
    EXPECT_EQ(m.coeffs()[2], q.k);
}

TEST(Eval, Examples) {
    Q q;
    const NcPolynomial p = q.x * q.x + q.c(q.i) * q.x + q.x * q.c(q.i);
    EXPECT_TRUE(p.eval(q.j - q.i).is_zero());
    const Element c(q.H, {Scalar(3), Scalar(-1), Scalar::rational(1, 2), Scalar(0)});
    EXPECT_EQ(q.c(c).eval(q.j + q.k), c);
    const NcPolynomial r = q.c(q.j) * q.x - q.x * q.c(q.j) - q.c(q.one);
    EXPECT_EQ(r.eval(q.i), -q.one - Scalar(2) * q.k);
    EXPECT_TRUE(((r) * (q.x - q.c(q.i))).eval(q.i).is_zero());
}

TEST(Eval, MatchesDirectChainProduct) {
    Q q;
    std::mt19937_64 rng(31);
    for (int s = 0; s < 50; ++s) {
        const Element a = random_rational_element(q.H, rng), b = random_rational_element(q.H, rng),
                      c = random_rational_element(q.H, rng), x0 = random_rational_element(q.H, rng);
        EXPECT_EQ(q.chain({a, b, c}).eval(x0), mul(mul(mul(mul(a, x0), b), x0), c));
    }
}

TEST(Expand, Examples) {
    Q q;
    const Element zero = Element::zero(q.H);
    EXPECT_EQ(expand_square(zero), q.x * q.x);
    EXPECT_EQ(expand_cube(zero), q.x * q.x * q.x);
    EXPECT_EQ(expand_prod(zero, zero), q.x * q.x);
    EXPECT_EQ(expand_square(q.i), q.x * q.x + q.c(q.i) * q.x + q.x * q.c(q.i) - q.c(q.one));
    EXPECT_EQ(expand_prod(q.i, q.j), q.x * q.x + q.c(q.i) * q.x + q.x * q.c(q.j) + q.c(q.k));
    EXPECT_EQ(expand_prod(q.i, q.j), (q.x + q.c(q.i)) * (q.x + q.c(q.j)));
}

TEST(Expand, RandomAgreement) {
    Q q;
    std::mt19937_64 rng(41);
    for (int s = 0; s < 50; ++s) {
        const Element a = random_rational_element(q.H, rng), b = random_rational_element(q.H, rng);
        const NcPolynomial fa = q.x + q.c(a), fb = q.x + q.c(b);
        EXPECT_EQ(expand_square(a), fa * fa);
        EXPECT_EQ(expand_cube(a), fa * fa * fa);
        EXPECT_EQ(expand_prod(a, b), fa * fb);
    }
}

TEST(B2MinusA2, Examples) {
    Q q;
    for (auto o : {DifferenceOrientation::RightThenLeft, DifferenceOrientation::LeftThenRight}) {
        const auto [l0, r0] = identity_b2_minus_a2(q.j, q.j, o);
        EXPECT_TRUE(l0.is_zero() && r0.is_zero());
        const auto [l1, r1] = identity_b2_minus_a2(q.one, q.i, o);
        EXPECT_EQ(l1, Scalar(-2) * q.one);
        EXPECT_EQ(r1, Scalar(-2) * q.one);
        const auto [l2, r2] = identity_b2_minus_a2(q.i, q.j, o);
        EXPECT_TRUE(l2.is_zero() && r2.is_zero());
    }
}

TEST(Question, Examples) {
    Q q;
    const Element zero = Element::zero(q.H);
    EXPECT_EQ(build_question_poly(zero, zero, zero), Scalar(2) * q.one * (q.x * q.x));
    EXPECT_TRUE(build_question_poly(q.i, q.j, q.k).eval(q.i).is_zero());
    const Element b(q.H, {Scalar(1), Scalar(2), Scalar(0), Scalar(-1)});
    EXPECT_EQ(build_question_poly(zero, b, b), Scalar(2) * q.one * (q.x * q.x) - q.c(b) * q.x - q.x * q.c(b));
}

TEST(Viete, Examples) {
    Q q;
    const Element half = Scalar::rational(1, 2) * q.one;
    for (auto pl : {VietePlacement::Front, VietePlacement::Middle, VietePlacement::Back}) {
        EXPECT_EQ(viete_expand(half, q.i, -q.i, pl), q.x * q.x + q.c(q.one));
        EXPECT_EQ(viete_expand(q.j, Element::zero(q.H), Element::zero(q.H), pl), q.x * q.x);
        const NcPolynomial v = viete_expand(half, q.i, -q.j, pl);
        EXPECT_TRUE(is_monic(v));
        EXPECT_TRUE(v.eval(q.i).is_zero());
        EXPECT_TRUE(v.eval(-q.j).is_zero());
    }
}

TEST(LeftForm, LamProductWitness) {
    Q q;
    const NcPolynomial f = q.x - q.c(q.i), g = q.x - q.c(q.j);
    const NcPolynomial fg = lam_mul(f, g);
    ASSERT_TRUE(left_coefficients(fg).has_value());
    EXPECT_EQ(fg.eval(q.i), Scalar(2) * q.k);
    EXPECT_TRUE(mul(f.eval(q.i), g.eval(q.i)).is_zero());
}

TEST(LeftForm, RejectsTwoSided) {
    Q q;
    EXPECT_FALSE(left_coefficients(q.x * q.c(q.i)).has_value());
    EXPECT_THROW(lam_mul(q.x * q.c(q.i), q.x), DomainError);
}

TEST(Format, Basic) {
    Q q;
    EXPECT_EQ(format_polynomial(q.x * q.x + q.c(q.i) * q.x - q.x * q.c(q.i) - q.c(q.one)), "x*x - x*i + i*x - 1");
    EXPECT_EQ(format_polynomial(NcPolynomial::zero(q.H)), "0");
}

TEST(Poly, AlgebraMismatch) {
    Q q;
    EXPECT_THROW(q.x + NcPolynomial::variable(builtin_complex()), AlgebraMismatch);
    EXPECT_THROW(q.x * NcPolynomial::variable(builtin_complex()), AlgebraMismatch);
}
