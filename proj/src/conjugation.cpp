#include "ncalg/conjugation.hpp"

#include "ncalg/errors.hpp"

namespace ncalg {

ConjugationProfile analyze(const Algebra& algebra) {
    const auto unit = algebra->unit_index();
    if (!unit || *unit != 0)
        throw MissingUnit("conjugation analysis needs unit index 0 in algebra '" + algebra->name() + "'");

    ConjugationProfile profile{algebra, false, false, std::nullopt};
    try {
        algebra->check_unit();
    } catch (const UnitAxiomError& e) {
        profile.violation = e.what();
        return profile;
    }
    profile.is_unital = true;

    const std::size_t n = algebra->dim();
    for (std::size_t p = 1; p < n; ++p)
        for (std::size_t k = 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l)
                if (algebra->c(k, l, p) != -algebra->c(l, k, p)) {
                    profile.violation = "vector part not antisymmetric at (p,k,l)=(" + std::to_string(p) + "," +
                                        std::to_string(k) + "," + std::to_string(l) + "): C^" + std::to_string(p) +
                                        "_{" + std::to_string(k) + std::to_string(l) + "} = " +
                                        algebra->c(k, l, p).to_string() + ", C^" + std::to_string(p) + "_{" +
                                        std::to_string(l) + std::to_string(k) + "} = " +
                                        algebra->c(l, k, p).to_string();
                    return profile;
                }
    profile.is_conjugation_algebra = true;
    return profile;
}

namespace {

void require(const ConjugationProfile& profile, const Element& x) {
    if (!profile.is_conjugation_algebra)
        throw NotConjugationAlgebra("algebra '" + profile.algebra->name() + "' is not an algebra with conjugation" +
                                    (profile.violation ? ": " + *profile.violation : std::string()));
    if (!same_algebra(profile.algebra, x.algebra())) throw AlgebraMismatch();
}

} // namespace

Element re(const ConjugationProfile& profile, const Element& x) {
    require(profile, x);
    std::vector<Scalar> coords(x.dim());
    coords[0] = x[0];
    return Element(x.algebra(), std::move(coords));
}

Element im(const ConjugationProfile& profile, const Element& x) {
    require(profile, x);
    std::vector<Scalar> coords = x.coords();
    coords[0] = Scalar(0);
    return Element(x.algebra(), std::move(coords));
}

Element conj(const ConjugationProfile& profile, const Element& x) {
    require(profile, x);
    std::vector<Scalar> coords(x.dim());
    coords[0] = x[0];
    for (std::size_t i = 1; i < x.dim(); ++i) coords[i] = -x[i];
    return Element(x.algebra(), std::move(coords));
}

Scalar norm_sq(const Element& x) {
    const auto& alg = x.algebra();
    if (!same_algebra(alg, builtin_quaternion()) && !same_algebra(alg, builtin_complex()))
        throw UnsupportedAlgebra("norm_sq is defined for the quaternion and complex tables only, not '" +
                                 alg->name() + "'");
    Scalar s;
    for (const auto& c : x.coords()) s += c * c;
    return s;
}

} // namespace ncalg
