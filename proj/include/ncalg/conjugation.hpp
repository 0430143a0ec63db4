#ifndef NCALG_CONJUGATION_HPP
#define NCALG_CONJUGATION_HPP

#include "ncalg/algebra.hpp"

#include <optional>
#include <string>

namespace ncalg {

/*
 * Result of inspecting an algebra's structure constants for a conjugation.
 *
 * An algebra qualifies when its unit is e_0 and, for all vector indices
 * k, l, p >= 1, C^p_{kl} = -C^p_{lk}: the vector part of a product of two
 * vectors is antisymmetric. Then re(x) = x^0 e_0 is central and
 * conj(x) = re(x) - im(x) is the induced conjugation.
 */
struct ConjugationProfile {
    Algebra algebra;
    bool is_unital = false;
    bool is_conjugation_algebra = false;
    std::optional<std::string> violation;
};

/// Throws MissingUnit unless the algebra declares unit index 0.
ConjugationProfile analyze(const Algebra& algebra);

/// Scalar part x^0 e_0.
Element re(const ConjugationProfile& profile, const Element& x);
/// x - re(x)
Element im(const ConjugationProfile& profile, const Element& x);
/// re(x) - im(x)
Element conj(const ConjugationProfile& profile, const Element& x);

/// Sum of squared coordinates. Only for the builtin quaternion and complex
/// tables (checked by value); anything else throws UnsupportedAlgebra.
Scalar norm_sq(const Element& x);

} // namespace ncalg

#endif
