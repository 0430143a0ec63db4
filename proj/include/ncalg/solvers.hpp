#ifndef NCALG_SOLVERS_HPP
#define NCALG_SOLVERS_HPP

#include "ncalg/algebra.hpp"
#include "ncalg/conjugation.hpp"
#include "ncalg/ncpoly.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace ncalg {

struct FiniteRoot {
    Element value;
    int multiplicity = 1;
};

struct FiniteRoots {
    std::vector<FiniteRoot> roots;
};

/*
 * {center + radius * u : u imaginary, |u| = 1}. The scalar part equals the
 * center's; the imaginary part lies at distance radius from the center's.
 * Only produced for algebras with conjugation whose imaginary quadratic form
 * is a multiple of the Euclidean one (H, and anything isometric to it).
 */
struct SphereFamily {
    Element center;
    Scalar radius;

    bool contains(const Element& x, double tol = 0.0) const;
    /// Deterministic members. With a rational center and radius every
    /// member is exact (rational inverse stereographic parametrization).
    std::vector<Element> sample(std::size_t count, std::uint64_t seed = 0) const;
};

/// particular + span(basis)
struct AffineFamily {
    Element particular;
    std::vector<Element> basis;
};

struct EmptySet {};

struct RootSet {
    std::variant<FiniteRoots, SphereFamily, AffineFamily, EmptySet> value;

    std::string_view variant_name() const;
    bool is_empty() const { return std::holds_alternative<EmptySet>(value); }
    const FiniteRoots* finite() const { return std::get_if<FiniteRoots>(&value); }
    const SphereFamily* sphere() const { return std::get_if<SphereFamily>(&value); }
    const AffineFamily* affine() const { return std::get_if<AffineFamily>(&value); }
};

/// residual^p = sum_{k,l} C^p_{kl} x^k x^l - a^p
std::vector<Scalar> square_residual_coords(const AlgebraSpec& spec, std::span<const Scalar> x, std::span<const Scalar> a);

/// residual^p = sum_{k,l} C^p_{kl} ((2a+x)^k x^l + x^k (2a+x)^l), the bracket
/// (2a+x)x + x(2a+x) = 2((a+x)^2 - a^2); zero iff x solves (a+x)^2 = a^2.
std::vector<Scalar> commutator_residual_coords(const AlgebraSpec& spec, std::span<const Scalar> a,
                                               std::span<const Scalar> x);

/*
 * x^2 = a in an algebra with conjugation.
 *
 * Re x != 0: x^k = a^k / (2 x^0) for k >= 1 and y = (x^0)^2 solves
 * y^2 - a^0 y - Q/4 = 0 with Q = -sum_{k,l>=1} C^0_{kl} a^k a^l; only y > 0
 * is kept. Re x = 0: needs im a = 0 and the imaginary quadratic form to hit
 * a^0. Throws NotConjugationAlgebra, or NotReducible when the imaginary
 * form is indefinite or the solution set is not representable.
 */
RootSet sqrt_conjugation(const ConjugationProfile& profile, const Element& a);

/// x^2 = a in H: {0 (double)}, a sphere for real a < 0, else {x, -x}.
RootSet sqrt_quaternion(const Element& a);

/// (a+x)^2 = a^2, i.e. x^2 + ax + xa = 0, as {s - a : s^2 = a^2}.
RootSet shifted_square(const Element& a);

/// ax - xa = b, exact on rationals. Affine solution set or Empty.
RootSet sylvester_linear(const Element& a, const Element& b, double tol = 1e-12);

struct ScanConfig {
    std::size_t starts = 512;
    std::uint64_t seed = 0;
    std::size_t newton_max_iters = 50;
    double residual_tol = 1e-10;
    double dedup_radius = 1e-6;
    double search_box = 4.0;

    /// Throws std::invalid_argument on non-positive tolerances or zero starts.
    void validate() const;
};

struct ScanPoint {
    Element x;
    double residual;
};

/*
 * Multistart Gauss-Newton on the coordinate residual of p(x). Starts are
 * uniform in [-box, box]^n from a seeded generator; the Jacobian comes
 * from the monomial chains and steps use a pseudo-inverse, so singular
 * Jacobians (root spheres) are fine. Converged points are deduplicated
 * and returned sorted by coordinates. Output depends only on p and cfg.
 */
std::vector<ScanPoint> newton_root_scan(const NcPolynomial& p, const ScanConfig& cfg);

} // namespace ncalg

#endif
