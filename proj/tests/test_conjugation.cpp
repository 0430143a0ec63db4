#include "ncalg/conjugation.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/identities.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ncalg;

namespace {

Algebra mutated_quaternion() {
    const Algebra H = builtin_quaternion();
    std::vector<Scalar> c = H->constants();
    auto at = [](std::size_t k, std::size_t l, std::size_t p) { return (k * 4 + l) * 4 + p; };
    c[at(2, 3, 1)] = 1;
    c[at(3, 2, 1)] = 1;
    return make_algebra("mutated", H->basis_labels(), c, 0, false);
}

} // namespace

TEST(Analyze, QuaternionAndComplexQualify) {
    for (const Algebra& A : {builtin_quaternion(), builtin_complex()}) {
        const ConjugationProfile p = analyze(A);
        EXPECT_TRUE(p.is_unital);
        EXPECT_TRUE(p.is_conjugation_algebra);
        EXPECT_FALSE(p.violation.has_value());
    }
}

TEST(Analyze, MutatedQuaternionNamesViolation) {
    const ConjugationProfile p = analyze(mutated_quaternion());
    EXPECT_FALSE(p.is_conjugation_algebra);
    ASSERT_TRUE(p.violation.has_value());
    EXPECT_NE(p.violation->find("(p,k,l)=(1,2,3)"), std::string::npos) << *p.violation;
}

TEST(Analyze, MissingUnit) {
    std::vector<Scalar> c(8, Scalar(0));
    c[(0 * 2 + 0) * 2 + 1] = 1;
    EXPECT_THROW(analyze(make_algebra("nil", {"a", "b"}, c, std::nullopt, false)), MissingUnit);
}

TEST(Conj, Examples) {
    const Algebra H = builtin_quaternion();
    const auto prof = analyze(H);
    const Element one = Element::one(H), i = Element::basis(H, 1), j = Element::basis(H, 2);
    EXPECT_EQ(conj(prof, i), -i);
    EXPECT_EQ(conj(prof, one), one);
    const Element x = one + Scalar(2) * i + Scalar(3) * j;
    EXPECT_EQ(re(prof, x), one);
    EXPECT_EQ(im(prof, x), Scalar(2) * i + Scalar(3) * j);
}

TEST(Conj, RejectsNonConjugationAlgebra) {
    const auto prof = analyze(mutated_quaternion());
    const Element x = Element::basis(prof.algebra, 1);
    EXPECT_THROW(conj(prof, x), NotConjugationAlgebra);
    EXPECT_THROW(re(prof, x), NotConjugationAlgebra);
    EXPECT_THROW(im(prof, x), NotConjugationAlgebra);
}

TEST(Conj, InvolutionAndAntiAutomorphism) {
    const Algebra H = builtin_quaternion();
    const auto prof = analyze(H);
    std::mt19937_64 rng(17);
    for (int s = 0; s < 200; ++s) {
        const Element x = random_rational_element(H, rng), y = random_rational_element(H, rng);
        EXPECT_EQ(conj(prof, conj(prof, x)), x);
        EXPECT_EQ(conj(prof, mul(x, y)), mul(conj(prof, y), conj(prof, x)));
        EXPECT_EQ(re(prof, x) + im(prof, x), x);
    }
}

TEST(NormSq, Examples) {
    const Algebra H = builtin_quaternion();
    EXPECT_EQ(norm_sq(Element(H, {Scalar(1), Scalar(1), Scalar(1), Scalar(1)})), Scalar(4));
    EXPECT_EQ(norm_sq(Element::zero(H)), Scalar(0));
    EXPECT_EQ(norm_sq(Element::basis(H, 1)), Scalar(1));
}

TEST(NormSq, MatchesProductWithConjugate) {
    for (const Algebra& A : {builtin_quaternion(), builtin_complex()}) {
        const auto prof = analyze(A);
        std::mt19937_64 rng(23);
        for (int s = 0; s < 100; ++s) {
            const Element x = random_rational_element(A, rng);
            const Element xc = mul(x, conj(prof, x));
            EXPECT_EQ(norm_sq(x), xc[0]);
            for (std::size_t p = 1; p < A->dim(); ++p) EXPECT_TRUE(xc[p].is_zero());
        }
    }
}

TEST(NormSq, UnsupportedAlgebra) {
    EXPECT_THROW(norm_sq(Element::basis(mutated_quaternion(), 1)), UnsupportedAlgebra);
}
