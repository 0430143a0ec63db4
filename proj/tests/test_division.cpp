#include "ncalg/division.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/identities.hpp"
#include "ncalg/parser.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ncalg;

namespace {

NcPolynomial hp(const char* text) { return parse_polynomial(text, builtin_quaternion()); }

NcPolynomial random_poly(const Algebra& A, std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree), count(1, 4);
    std::vector<Monomial> terms;
    const int n = count(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<Element> chain;
        const int d = deg(rng);
        for (int c = 0; c <= d; ++c) chain.push_back(random_rational_element(A, rng));
        terms.emplace_back(std::move(chain));
    }
    return NcPolynomial(A, std::move(terms));
}

} // namespace

TEST(Divide, ProductOfLinearFactors) {
    const Algebra H = builtin_quaternion();
    const NcPolynomial r = hp("x*x - i*x - x*j + k");
    const LinearDivisor d = LinearDivisor::monic(Element::basis(H, 1));
    const DivisionResult res = divide_linear(r, d);
    EXPECT_TRUE(res.remainder.is_zero());
    EXPECT_EQ(recompose(res, d), r);
}

TEST(Divide, DivisorByItself) {
    const Algebra H = builtin_quaternion();
    const Element c(H, {Scalar(1), Scalar(-2), Scalar::rational(1, 3), Scalar(0)});
    const LinearDivisor d = LinearDivisor::monic(c);
    const DivisionResult res = divide_linear(d.as_polynomial(), d);
    ASSERT_EQ(res.quotient_terms.size(), 1u);
    EXPECT_EQ(res.quotient_terms[0].prefix.degree(), 0u);
    EXPECT_EQ(res.quotient_terms[0].prefix.coeffs()[0], Element::one(H));
    EXPECT_EQ(res.quotient_terms[0].right, Element::one(H));
    EXPECT_TRUE(res.remainder.is_zero());
}

TEST(Divide, Constant) {
    const Algebra H = builtin_quaternion();
    const Element a(H, {Scalar(2), Scalar(0), Scalar(5), Scalar(-1)});
    const DivisionResult res = divide_linear(NcPolynomial::constant(a), LinearDivisor::monic(Element::basis(H, 2)));
    EXPECT_TRUE(res.quotient_terms.empty());
    EXPECT_EQ(res.remainder, a);
}

TEST(Divide, RemainderIsValueAtRootForMonic) {
    const Algebra H = builtin_quaternion();
    std::mt19937_64 rng(4);
    for (int s = 0; s < 30; ++s) {
        const NcPolynomial r = random_poly(H, rng, 3);
        const Element c = random_rational_element(H, rng);
        const DivisionResult res = divide_linear(r, LinearDivisor::monic(c));
        EXPECT_EQ(res.remainder, r.eval(c));
    }
}

TEST(Divide, RandomMonicRecomposition) {
    const Algebra H = builtin_quaternion();
    std::mt19937_64 rng(12);
    for (int s = 0; s < 100; ++s) {
        const NcPolynomial r = random_poly(H, rng, 3);
        const LinearDivisor d = LinearDivisor::monic(random_rational_element(H, rng));
        EXPECT_EQ(recompose(divide_linear(r, d), d), r);
    }
}

TEST(Divide, NonMonicRecomposition) {
    const Algebra H = builtin_quaternion();
    const LinearDivisor d = LinearDivisor::from_polynomial(hp("i*x*j + 2*x - k"));
    std::mt19937_64 rng(13);
    for (int s = 0; s < 30; ++s) {
        const NcPolynomial r = random_poly(H, rng, 3);
        EXPECT_EQ(recompose(divide_linear(r, d), d), r);
    }
}

TEST(Divide, ComplexNonMonic) {
    const Algebra C = builtin_complex();
    const LinearDivisor d = LinearDivisor::from_polynomial(parse_polynomial("(1+i)*x - 3", C));
    std::mt19937_64 rng(14);
    for (int s = 0; s < 30; ++s) {
        const NcPolynomial r = random_poly(C, rng, 3);
        EXPECT_EQ(recompose(divide_linear(r, d), d), r);
    }
}

TEST(Divide, SingularLeadingTensor) {
    // x -> x - ixi kills j
    EXPECT_THROW(divide_linear(hp("x*x"), LinearDivisor::from_polynomial(hp("x - i*x*i"))), DivisorNotInvertible);
}

TEST(Divide, InverseNotRepresentable) {
    // over C the map x -> xi + ix = 2ix is invertible, but 1(x)i + i(x)1 has no inverse in C(x)C
    const Algebra C = builtin_complex();
    const LinearDivisor d = LinearDivisor::from_polynomial(parse_polynomial("x*i + i*x", C));
    EXPECT_THROW(divide_linear(parse_polynomial("x*x", C), d), DivisorInverseNotRepresentable);
}

TEST(Divide, DivisorMustBeDegreeOne) {
    EXPECT_THROW(LinearDivisor::from_polynomial(hp("x*x")), DomainError);
    EXPECT_THROW(LinearDivisor::from_polynomial(hp("i")), DomainError);
}

TEST(Divide, RequiresUnit) {
    std::vector<Scalar> c(8, Scalar(0));
    c[(0 * 2 + 0) * 2 + 1] = 1;
    const Algebra N = make_algebra("nil", {"a", "b"}, c, std::nullopt, false);
    const Element a = Element::basis(N, 0);
    const NcPolynomial r(N, {Monomial({a, a})});
    LinearDivisor d{CoeffTensor::of(Monomial({a, a})), a};
    EXPECT_THROW(divide_linear(r, d), MissingUnit);
}
