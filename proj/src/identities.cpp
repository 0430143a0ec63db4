#include "ncalg/identities.hpp"

#include "ncalg/ncpoly.hpp"

#include <functional>

namespace ncalg {

Element random_rational_element(const Algebra& algebra, std::mt19937_64& rng, long max_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    std::vector<Scalar> coords;
    coords.reserve(algebra->dim());
    for (std::size_t i = 0; i < algebra->dim(); ++i) coords.push_back(Scalar::rational(num(rng), den(rng)));
    return Element(algebra, std::move(coords));
}

bool IdentityReport::all_passed() const {
    for (const auto& c : checks)
        if (c.failed > 0) return false;
    return true;
}

namespace {

void record(IdentityCheck& check, bool ok, const std::function<std::string()>& describe) {
    if (ok) {
        ++check.passed;
        return;
    }
    if (check.failed++ == 0) check.first_failure = describe();
}

// Elements commuting with every basis vector.
Element random_central(const Algebra& alg, std::mt19937_64& rng) {
    // Scalars are central in any unital algebra; in commutative tables anything is.
    bool commutative = true;
    for (std::size_t k = 0; k < alg->dim() && commutative; ++k)
        for (std::size_t l = 0; l < alg->dim() && commutative; ++l)
            for (std::size_t p = 0; p < alg->dim(); ++p)
                if (alg->c(k, l, p) != alg->c(l, k, p)) {
                    commutative = false;
                    break;
                }
    if (commutative) return random_rational_element(alg, rng);
    std::uniform_int_distribution<long> num(-5, 5);
    return Element::scalar(alg, Scalar(num(rng)));
}

} // namespace

IdentityReport run_identity_suite(const Algebra& alg, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const NcPolynomial x = NcPolynomial::variable(alg);
    const Element one = Element::one(alg);

    IdentityCheck square{"expand_square", 0, 0, {}}, cube{"expand_cube", 0, 0, {}}, prod{"expand_prod", 0, 0, {}};
    IdentityCheck b2a2{"b2_minus_a2", 0, 0, {}}, b2a2_alt{"b2_minus_a2_alt_orientation", 0, 0, {}};
    IdentityCheck viete{"viete_monic_vanishing", 0, 0, {}}, question{"question_poly_vanishes_at_a", 0, 0, {}};
    IdentityCheck central{"eval_multiplicative_at_center", 0, 0, {}};

    for (std::size_t s = 0; s < samples; ++s) {
        const Element a = random_rational_element(alg, rng);
        const Element b = random_rational_element(alg, rng);
        const Element c = random_rational_element(alg, rng);
        const auto fa = x + NcPolynomial::constant(a);
        const auto fb = x + NcPolynomial::constant(b);
        auto at = [&] { return "a=" + format_element(a) + " b=" + format_element(b); };

        record(square, expand_square(a) == fa * fa, at);
        record(cube, expand_cube(a) == fa * fa * fa, at);
        record(prod, expand_prod(a, b) == fa * fb, at);

        const auto [l1, r1] = identity_b2_minus_a2(a, b, DifferenceOrientation::RightThenLeft);
        record(b2a2, l1 == r1, at);
        const auto [l2, r2] = identity_b2_minus_a2(a, b, DifferenceOrientation::LeftThenRight);
        record(b2a2_alt, l2 == r2, at);

        for (auto placement : {VietePlacement::Front, VietePlacement::Middle, VietePlacement::Back}) {
            const NcPolynomial v = viete_expand(c, a, b, placement);
            record(viete, is_monic(v) && v.eval(a).is_zero() && v.eval(b).is_zero(),
                   [&] { return "c=" + format_element(c) + " " + at(); });
        }

        record(question, build_question_poly(a, b, c).eval(a).is_zero(), at);

        const Element z = random_central(alg, rng);
        const NcPolynomial p = fa * NcPolynomial::constant(c) * fb;
        const NcPolynomial q = fb * fa + NcPolynomial::constant(b);
        record(central, (p * q).eval(z) == mul(p.eval(z), q.eval(z)), [&] { return "x0=" + format_element(z); });
    }

    IdentityReport report{{square, cube, prod, b2a2, b2a2_alt, viete, question, central}};

    if (same_algebra(alg, builtin_quaternion())) {
        IdentityCheck lam{"noncentral_eval_not_multiplicative", 0, 0, {}};
        const Element i = Element::basis(alg, 1);
        const Element j = Element::basis(alg, 2);
        const NcPolynomial p = NcPolynomial(alg, {Monomial({j, one}), Monomial({-one, j})}) - NcPolynomial::constant(one);
        const NcPolynomial q = linear_factor(i);
        const Element lhs = (p * q).eval(j);
        const Element rhs = mul(p.eval(j), q.eval(j));
        record(lam, !(lhs == rhs), [&] {
            return "p=jx-xj-1, q=x-i, x0=j: eval(pq)=" + format_element(lhs) + " equals eval(p)eval(q)=" +
                   format_element(rhs);
        });
        report.checks.push_back(lam);
    }
    return report;
}

} // namespace ncalg
