#ifndef NCALG_NCPOLY_HPP
#define NCALG_NCPOLY_HPP

#include "ncalg/algebra.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ncalg {

/// a_0 x a_1 x ... x a_k. Degree 0 is a bare element.
class Monomial {
public:
    explicit Monomial(std::vector<Element> coeffs);
    static Monomial constant(Element a) { return Monomial({std::move(a)}); }

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
    const Algebra& algebra() const noexcept { return coeffs_.front().algebra(); }
    bool has_zero_coeff() const;

    /// a_0 * x0 * a_1 * ... * x0 * a_k, multiplied left to right.
    Element eval(const Element& x0) const;

    /// Chain product: the inner coefficients merge, (..x a_m)(b_0 x..) = ..x (a_m b_0) x..
    friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);

private:
    std::vector<Element> coeffs_;
};

/*
 * Dense coefficient tensor of one homogeneous degree k:
 * sum T[i_0..i_k] e_{i_0} x e_{i_1} x ... x e_{i_k}, index i_0 most significant.
 */
class CoeffTensor {
public:
    CoeffTensor(std::size_t dim, std::size_t degree);
    CoeffTensor(std::size_t dim, std::size_t degree, std::vector<Scalar> data);

    /// Outer product of the coefficient coordinate vectors.
    static CoeffTensor of(const Monomial& m);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return data_.size(); }
    const std::vector<Scalar>& data() const noexcept { return data_; }
    Scalar& operator[](std::size_t flat) { return data_[flat]; }
    const Scalar& operator[](std::size_t flat) const { return data_[flat]; }
    const Scalar& at(const std::vector<std::size_t>& index) const;
    /// Multi-index of a flat position.
    std::vector<std::size_t> unflatten(std::size_t flat) const;

    bool is_zero() const;
    CoeffTensor& operator+=(const CoeffTensor& rhs);
    void accumulate(const Monomial& m);

    friend bool operator==(const CoeffTensor&, const CoeffTensor&) = default;

    /// Entry count cap for materialized tensors (4^7 covers degree 6 over H).
    static constexpr std::size_t max_entries = 16384;
    static bool fits(std::size_t dim, std::size_t degree);

private:
    std::size_t dim_;
    std::size_t degree_;
    std::vector<Scalar> data_;
};

/*
 * Polynomial over an algebra: a list of monomials plus, per degree, the
 * canonical tensor. Equality is degreewise tensor equality. Tensors are
 * built eagerly; degrees beyond CoeffTensor::max_entries keep only the
 * monomial list and make equality checks throw DegreeCapExceeded.
 */
class NcPolynomial {
public:
    NcPolynomial(Algebra algebra, std::vector<Monomial> monomials);

    static NcPolynomial zero(const Algebra& algebra) { return NcPolynomial(algebra, {}); }
    static NcPolynomial constant(const Element& a);
    /// 1 x 1
    static NcPolynomial variable(const Algebra& algebra);
    /// sum over nonzero entries of (T e_{i_0}) x e_{i_1} x ... x e_{i_k}
    static NcPolynomial from_tensor(const Algebra& algebra, const CoeffTensor& t);

    const Algebra& algebra() const noexcept { return algebra_; }
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

    /// Highest degree with a nonzero canonical tensor, -1 for the zero polynomial.
    int degree() const;
    /// Degree k part; zero tensor when k exceeds every monomial's degree.
    CoeffTensor canonical_tensor(std::size_t k) const;
    /// Rebuilt from the tensors: one monomial per nonzero basis entry.
    NcPolynomial canonical() const;

    Element eval(const Element& x0) const;

    NcPolynomial operator-() const;
    friend NcPolynomial operator+(const NcPolynomial& p, const NcPolynomial& q);
    friend NcPolynomial operator-(const NcPolynomial& p, const NcPolynomial& q);
    friend NcPolynomial operator*(const NcPolynomial& p, const NcPolynomial& q);
    friend NcPolynomial operator*(const Element& a, const NcPolynomial& p);
    friend NcPolynomial operator*(const NcPolynomial& p, const Element& a);

    friend bool operator==(const NcPolynomial& p, const NcPolynomial& q);

private:
    std::size_t raw_degree() const;

    Algebra algebra_;
    std::vector<Monomial> monomials_;
    std::vector<std::optional<CoeffTensor>> tensors_;
};

NcPolynomial poly_from_monomials(const Algebra& algebra, std::vector<Monomial> monomials);
CoeffTensor canonical_tensor(const NcPolynomial& p, std::size_t k);
NcPolynomial poly_add(const NcPolynomial& p, const NcPolynomial& q);
NcPolynomial poly_mul(const NcPolynomial& p, const NcPolynomial& q);
Element eval(const NcPolynomial& p, const Element& x0);

/// x - c
NcPolynomial linear_factor(const Element& c);

/// (x+a)^2 = x^2 + ax + xa + a^2
NcPolynomial expand_square(const Element& a);
/// (x+a)^3, all eight chain terms
NcPolynomial expand_cube(const Element& a);
/// (x+a)(x+b) = x^2 + xb + ax + ab
NcPolynomial expand_prod(const Element& a, const Element& b);

enum class DifferenceOrientation {
    RightThenLeft,  // (b-a)b + a(b-a)
    LeftThenRight,  // b(b-a) + (b-a)a
};

/// (b^2 - a^2, split form); the two components are always equal.
std::pair<Element, Element> identity_b2_minus_a2(const Element& a, const Element& b,
                                                  DifferenceOrientation orientation = DifferenceOrientation::RightThenLeft);

/// (x-b)(x-a) + (x-a)(x-c); vanishes at a.
NcPolynomial build_question_poly(const Element& a, const Element& b, const Element& c);

enum class VietePlacement {
    Front,   // c(x-x1)(x-x2) + d(x-x2)(x-x1)
    Middle,  // (x-x1)c(x-x2) + (x-x2)d(x-x1)
    Back,    // (x-x1)(x-x2)c + (x-x2)(x-x1)d
};

/// Monic quadratic vanishing at x1 and x2, built with d = 1 - c.
NcPolynomial viete_expand(const Element& c, const Element& x1, const Element& x2,
                          VietePlacement placement = VietePlacement::Front);

/// Leading coefficient of degree 2 equals the 1 (x) 1 (x) 1 pattern.
bool is_monic(const NcPolynomial& p);

/*
 * Left-coefficient form sum a_i x^i (each monomial a x 1 x ... x 1), the
 * setting of the polynomial ring A[x] with central indeterminate. Returns
 * nullopt when some tensor entry has a non-unit factor after the first slot.
 */
std::optional<std::vector<Element>> left_coefficients(const NcPolynomial& p);

/// Product in A[x]: (sum a_i x^i)(sum b_j x^j) = sum a_i b_j x^(i+j).
/// Both operands must be in left-coefficient form (DomainError otherwise).
NcPolynomial lam_mul(const NcPolynomial& f, const NcPolynomial& g);

/// Terms as text over the basis labels, e.g. "x*x + i*x - x*i - 1".
std::string format_polynomial(const NcPolynomial& p);

} // namespace ncalg

#endif
