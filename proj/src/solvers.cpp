#include "ncalg/solvers.hpp"

#include "ncalg/errors.hpp"
#include "ncalg/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>

namespace ncalg {

// ---------------------------------------------------------------- RootSet

std::string_view RootSet::variant_name() const {
    struct Visitor {
        std::string_view operator()(const FiniteRoots&) const { return "finite"; }
        std::string_view operator()(const SphereFamily&) const { return "sphere"; }
        std::string_view operator()(const AffineFamily&) const { return "affine"; }
        std::string_view operator()(const EmptySet&) const { return "empty"; }
    };
    return std::visit(Visitor{}, value);
}

bool SphereFamily::contains(const Element& x, double tol) const {
    const Element d = x - center;
    if (!d[0].is_zero(tol)) return false;
    Scalar r2;
    for (std::size_t i = 1; i < d.dim(); ++i) r2 += d[i] * d[i];
    return approx_equal(r2, radius * radius, tol);
}

std::vector<Element> SphereFamily::sample(std::size_t count, std::uint64_t seed) const {
    const Algebra& alg = center.algebra();
    const std::size_t m = alg->dim() - 1;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 7);

    std::vector<Element> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<Scalar> u(m);
        if (m == 1) {
            u[0] = Scalar(s % 2 == 0 ? 1 : -1);
        } else {
            // Inverse stereographic projection of a rational point of Q^{m-1}.
            std::vector<Scalar> t(m - 1);
            Scalar norm2;
            for (auto& ti : t) {
                ti = Scalar::rational(num(rng), den(rng));
                norm2 += ti * ti;
            }
            const Scalar denom = norm2 + Scalar(1);
            for (std::size_t i = 0; i + 1 < m; ++i) u[i] = Scalar(2) * t[i] / denom;
            u[m - 1] = (norm2 - Scalar(1)) / denom;
        }
        std::vector<Scalar> coords = center.coords();
        for (std::size_t i = 0; i < m; ++i) coords[i + 1] += radius * u[i];
        out.emplace_back(alg, std::move(coords));
    }
    return out;
}

// -------------------------------------------------------- coordinate forms

std::vector<Scalar> square_residual_coords(const AlgebraSpec& spec, std::span<const Scalar> x, std::span<const Scalar> a) {
    if (x.size() != spec.dim() || a.size() != spec.dim()) throw ShapeError("coordinate vector length differs from dim");
    std::vector<Scalar> r(spec.dim());
    for (const auto& t : spec.terms())
        if (!x[t.k].is_zero() && !x[t.l].is_zero()) r[t.p] += t.c * x[t.k] * x[t.l];
    for (std::size_t p = 0; p < spec.dim(); ++p) r[p] -= a[p];
    return r;
}

std::vector<Scalar> commutator_residual_coords(const AlgebraSpec& spec, std::span<const Scalar> a,
                                               std::span<const Scalar> x) {
    if (x.size() != spec.dim() || a.size() != spec.dim()) throw ShapeError("coordinate vector length differs from dim");
    std::vector<Scalar> y(spec.dim());
    for (std::size_t i = 0; i < spec.dim(); ++i) y[i] = Scalar(2) * a[i] + x[i];
    std::vector<Scalar> r(spec.dim());
    for (const auto& t : spec.terms()) r[t.p] += t.c * (y[t.k] * x[t.l] + x[t.k] * y[t.l]);
    return r;
}

// ------------------------------------------------------------ square roots

namespace {

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    bool indefinite() const { return positive > 0 && negative > 0; }
};

// Sylvester inertia by symmetric elimination.
Inertia inertia(std::vector<std::vector<Scalar>> m, double tol) {
    Inertia in;
    std::vector<std::size_t> live(m.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
    while (!live.empty()) {
        auto pivot_it = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return !m[i][i].is_zero(tol); });
        if (pivot_it == live.end()) {
            for (auto i : live)
                for (auto j : live)
                    if (!m[i][j].is_zero(tol)) {
                        // zero diagonal with a live off-diagonal entry: a hyperbolic plane
                        in.positive += 1;
                        in.negative += 1;
                        return in;
                    }
            in.zero += static_cast<int>(live.size());
            return in;
        }
        const std::size_t p = *pivot_it;
        (m[p][p].sign() > 0 ? in.positive : in.negative) += 1;
        live.erase(pivot_it);
        for (auto i : live)
            for (auto j : live) m[i][j] -= m[i][p] * m[p][j] / m[p][p];
    }
    return in;
}

void add_unique(std::vector<FiniteRoot>& roots, FiniteRoot r) {
    for (const auto& q : roots)
        if (approx_equal(q.value, r.value, 1e-12)) return;
    roots.push_back(std::move(r));
}

} // namespace

RootSet sqrt_conjugation(const ConjugationProfile& profile, const Element& a) {
    if (!profile.is_conjugation_algebra)
        throw NotConjugationAlgebra("algebra '" + profile.algebra->name() + "' is not an algebra with conjugation" +
                                    (profile.violation ? ": " + *profile.violation : std::string()));
    const Algebra& alg = profile.algebra;
    if (!same_algebra(alg, a.algebra())) throw AlgebraMismatch();
    const std::size_t n = alg->dim();
    const std::size_t m = n - 1;
    constexpr double tol = 1e-12;

    // Imaginary quadratic form S(v) = sum_{k,l>=1} C^0_{kl} v^k v^l, symmetrized.
    std::vector<std::vector<Scalar>> form(m, std::vector<Scalar>(m));
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t l = 1; l < n; ++l)
            form[k - 1][l - 1] = (alg->c(k, l, 0) + alg->c(l, k, 0)) / Scalar(2);
    const Inertia in = inertia(form, tol);
    if (in.indefinite())
        throw NotReducible("imaginary quadratic form of '" + alg->name() + "' is indefinite; x^2 = a is not reduced "
                           "to a single scalar quadratic");

    const Element a_im = im(profile, a);
    Scalar s_aim;
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) s_aim += form[k][l] * a_im[k + 1] * a_im[l + 1];
    const Scalar q = -s_aim;
    const Scalar& a0 = a[0];

    if (a.is_zero(tol)) {
        if (in.zero == 0) return {FiniteRoots{{{Element::zero(alg), 2}}}};
    }

    std::vector<FiniteRoot> roots;

    // Branch Re x != 0.
    const Scalar disc = a0 * a0 + q;
    if (disc.sign() >= 0 || disc.is_zero(tol)) {
        const Scalar root_disc = disc.sign() > 0 ? sqrt(disc) : Scalar(0);
        for (const Scalar& y : {(a0 + root_disc) / Scalar(2), (a0 - root_disc) / Scalar(2)}) {
            if (y.sign() <= 0 || y.is_zero(tol)) continue;
            const Scalar x0 = sqrt(y);
            for (const Scalar& sx0 : {x0, -x0}) {
                std::vector<Scalar> coords(n);
                coords[0] = sx0;
                for (std::size_t k = 1; k < n; ++k) coords[k] = a[k] / (Scalar(2) * sx0);
                add_unique(roots, {Element(alg, std::move(coords)), 1});
            }
        }
    }

    // Branch Re x = 0: im a must vanish, then S(v) = a^0.
    if (a_im.is_zero(tol)) {
        bool isotropic = true;  // form == c * I
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t l = 0; l < m; ++l)
                if (!(k == l ? form[k][l] == form[0][0] : form[k][l].is_zero(tol))) isotropic = false;

        if (in.positive == 0 && in.negative == 0) {
            if (a0.is_zero(tol)) {
                std::vector<Element> basis;
                for (std::size_t k = 1; k < n; ++k) basis.push_back(Element::basis(alg, k));
                if (!roots.empty())
                    throw NotReducible("solution set mixes isolated roots with an affine family");
                return {AffineFamily{Element::zero(alg), std::move(basis)}};
            }
        } else if (a0.is_zero(tol)) {
            if (in.zero > 0) throw NotReducible("degenerate imaginary form: null directions are not enumerated");
            add_unique(roots, {Element::zero(alg), 1});
        } else if (isotropic) {
            const Scalar r2 = a0 / form[0][0];
            if (r2.sign() > 0) {
                const Scalar r = sqrt(r2);
                if (m == 1) {
                    for (const Scalar& s : {r, -r}) {
                        std::vector<Scalar> coords(n);
                        coords[1] = s;
                        add_unique(roots, {Element(alg, std::move(coords)), 1});
                    }
                } else {
                    if (!roots.empty())
                        throw NotReducible("solution set mixes isolated roots with a sphere");
                    return {SphereFamily{Element::zero(alg), r}};
                }
            }
        } else {
            const bool reachable = (in.positive > 0 && a0.sign() > 0) || (in.negative > 0 && a0.sign() < 0);
            if (reachable)
                throw NotReducible("imaginary roots form an ellipsoid, not a sphere, in '" + alg->name() + "'");
        }
    }

    if (roots.empty()) return {EmptySet{}};
    return {FiniteRoots{std::move(roots)}};
}

RootSet sqrt_quaternion(const Element& a) {
    if (!same_algebra(a.algebra(), builtin_quaternion()))
        throw UnsupportedAlgebra("sqrt_quaternion needs the quaternion algebra, got '" + a.algebra()->name() + "'");
    const Algebra& alg = a.algebra();
    if (a.is_zero()) return {FiniteRoots{{{Element::zero(alg), 2}}}};

    const bool real = a[1].is_zero() && a[2].is_zero() && a[3].is_zero();
    if (real && a[0].sign() < 0) return {SphereFamily{Element::zero(alg), sqrt(-a[0])}};

    const Scalar norm = sqrt(norm_sq(a));
    const Scalar y = (a[0] + norm) / Scalar(2);
    const Scalar x0 = sqrt(y);
    std::vector<Scalar> coords(4);
    coords[0] = x0;
    for (std::size_t k = 1; k < 4; ++k) coords[k] = a[k] / (Scalar(2) * x0);
    Element x(alg, std::move(coords));
    Element neg = -x;
    return {FiniteRoots{{{std::move(x), 1}, {std::move(neg), 1}}}};
}

RootSet shifted_square(const Element& a) {
    RootSet base = sqrt_quaternion(mul(a, a));
    if (auto* f = std::get_if<FiniteRoots>(&base.value)) {
        for (auto& r : f->roots) r.value -= a;
        return base;
    }
    if (auto* s = std::get_if<SphereFamily>(&base.value)) {
        s->center -= a;
        return base;
    }
    return base;
}

RootSet sylvester_linear(const Element& a, const Element& b, double tol) {
    if (!same_algebra(a.algebra(), b.algebra())) throw AlgebraMismatch();
    const Algebra& alg = a.algebra();
    const std::size_t n = alg->dim();
    Matrix m(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const Element c = commutator(a, Element::basis(alg, col));
        for (std::size_t row = 0; row < n; ++row) m(row, col) = c[row];
    }
    const LinearSolution sol = solve_linear(m, b.coords(), tol);
    if (!sol.consistent) return {EmptySet{}};
    std::vector<Element> basis;
    for (const auto& v : sol.kernel) basis.emplace_back(alg, v);
    return {AffineFamily{Element(alg, sol.particular), std::move(basis)}};
}

// ----------------------------------------------------------------- scanner

void ScanConfig::validate() const {
    if (starts == 0) throw std::invalid_argument("scan needs at least one start");
    if (!(residual_tol > 0)) throw std::invalid_argument("residual_tol must be positive");
    if (!(dedup_radius > 0)) throw std::invalid_argument("dedup_radius must be positive");
    if (!(search_box > 0)) throw std::invalid_argument("search_box must be positive");
}

namespace {

using Vec = Eigen::VectorXd;

// Float image of a polynomial: structure constants and monomial chains.
class FloatPoly {
public:
    explicit FloatPoly(const NcPolynomial& p) : n_(p.algebra()->dim()) {
        for (const auto& t : p.algebra()->terms()) terms_.push_back({t.k, t.l, t.p, t.c.to_double()});
        for (const auto& m : p.monomials()) {
            if (m.has_zero_coeff()) continue;
            std::vector<Vec> chain;
            for (const auto& a : m.coeffs()) {
                Vec v(n_);
                for (std::size_t i = 0; i < n_; ++i) v[i] = a[i].to_double();
                chain.push_back(std::move(v));
            }
            chains_.push_back(std::move(chain));
        }
    }

    std::size_t dim() const { return n_; }

    Vec mul(const Vec& x, const Vec& y) const {
        Vec out = Vec::Zero(n_);
        for (const auto& t : terms_) out[t.p] += t.c * x[t.k] * y[t.l];
        return out;
    }

    // Residual F(x) and Jacobian J (column m = dF/dx^m).
    void evaluate(const Vec& x, Vec& f, Eigen::MatrixXd& jac) const {
        f = Vec::Zero(n_);
        jac = Eigen::MatrixXd::Zero(n_, n_);
        for (const auto& chain : chains_) {
            const std::size_t k = chain.size() - 1;
            // prefix[s] = a_0 x a_1 ... x a_s ; suffix[s] = a_s x ... x a_k
            std::vector<Vec> prefix(k + 1), suffix(k + 1);
            prefix[0] = chain[0];
            for (std::size_t s = 1; s <= k; ++s) prefix[s] = mul(mul(prefix[s - 1], x), chain[s]);
            suffix[k] = chain[k];
            for (std::size_t s = k; s-- > 0;) suffix[s] = mul(mul(chain[s], x), suffix[s + 1]);
            f += prefix[k];
            // d/dx at the s-th occurrence: prefix[s-1] v suffix[s]
            for (std::size_t s = 1; s <= k; ++s)
                for (std::size_t m = 0; m < n_; ++m) {
                    Vec e = Vec::Zero(n_);
                    e[m] = 1.0;
                    jac.col(m) += mul(mul(prefix[s - 1], e), suffix[s]);
                }
        }
    }

private:
    struct Term {
        std::size_t k, l, p;
        double c;
    };
    std::size_t n_;
    std::vector<Term> terms_;
    std::vector<std::vector<Vec>> chains_;
};

struct Converged {
    Vec x;
    double residual;
};

std::optional<Converged> newton(const FloatPoly& poly, Vec x, const ScanConfig& cfg) {
    Vec f;
    Eigen::MatrixXd jac;
    for (std::size_t it = 0; it < cfg.newton_max_iters; ++it) {
        poly.evaluate(x, f, jac);
        if (!f.allFinite()) return std::nullopt;
        if (f.norm() <= cfg.residual_tol) {
            // polish a few steps while the residual keeps dropping
            Converged best{x, f.norm()};
            for (int extra = 0; extra < 3; ++extra) {
                Vec step = jac.completeOrthogonalDecomposition().solve(-f);
                Vec y = x + step;
                Vec fy;
                Eigen::MatrixXd jy;
                poly.evaluate(y, fy, jy);
                if (!(fy.norm() < best.residual)) break;
                x = y;
                f = fy;
                jac = jy;
                best = {x, f.norm()};
            }
            return best;
        }
        Vec step = jac.completeOrthogonalDecomposition().solve(-f);
        if (!step.allFinite()) return std::nullopt;
        x += step;
        if (x.norm() > 1e8) return std::nullopt;
    }
    poly.evaluate(x, f, jac);
    if (f.allFinite() && f.norm() <= cfg.residual_tol) return Converged{x, f.norm()};
    return std::nullopt;
}

bool lex_less(const Vec& a, const Vec& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

} // namespace

std::vector<ScanPoint> newton_root_scan(const NcPolynomial& p, const ScanConfig& cfg) {
    cfg.validate();
    const FloatPoly poly(p);
    const std::size_t n = poly.dim();

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> box(-cfg.search_box, cfg.search_box);

    std::vector<Converged> hits;
    for (std::size_t s = 0; s < cfg.starts; ++s) {
        Vec x0(n);
        for (std::size_t i = 0; i < n; ++i) x0[i] = box(rng);
        if (auto c = newton(poly, x0, cfg)) hits.push_back(std::move(*c));
    }

    std::sort(hits.begin(), hits.end(), [](const Converged& a, const Converged& b) { return lex_less(a.x, b.x); });
    std::vector<Converged> clusters;
    for (auto& h : hits) {
        auto near = std::find_if(clusters.begin(), clusters.end(),
                                 [&](const Converged& c) { return (c.x - h.x).norm() <= cfg.dedup_radius; });
        if (near == clusters.end())
            clusters.push_back(std::move(h));
        else if (h.residual < near->residual)
            *near = std::move(h);
    }
    std::sort(clusters.begin(), clusters.end(), [](const Converged& a, const Converged& b) { return lex_less(a.x, b.x); });

    std::vector<ScanPoint> out;
    out.reserve(clusters.size());
    for (const auto& c : clusters) {
        std::vector<Scalar> coords(n);
        for (std::size_t i = 0; i < n; ++i) coords[i] = Scalar(c.x[static_cast<Eigen::Index>(i)]);
        out.push_back({Element(p.algebra(), std::move(coords)), c.residual});
    }
    return out;
}

} // namespace ncalg
