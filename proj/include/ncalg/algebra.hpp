#ifndef NCALG_ALGEBRA_HPP
#define NCALG_ALGEBRA_HPP

#include "ncalg/scalar.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ncalg {

/*
 * Finite-dimensional algebra given by its structure constants.
 *
 * Basis products are e_k e_l = sum_p C^p_{kl} e_p, stored as
 * constants[k][l][p] (flattened row-major). Instances are immutable and
 * shared through the Algebra handle; build them with make_algebra, which
 * runs the unit and associativity checks requested by the flags.
 */
class AlgebraSpec {
public:
    struct Term {
        std::size_t k, l, p;
        Scalar c;
    };

    AlgebraSpec(std::string name, std::vector<std::string> basis_labels, std::vector<Scalar> constants,
                std::optional<std::size_t> unit_index, bool associative);

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& basis_labels() const noexcept { return labels_; }
    std::optional<std::size_t> unit_index() const noexcept { return unit_; }
    bool flagged_associative() const noexcept { return associative_; }

    /// C^p_{kl}
    const Scalar& c(std::size_t k, std::size_t l, std::size_t p) const { return constants_[(k * dim() + l) * dim() + p]; }
    const std::vector<Scalar>& constants() const noexcept { return constants_; }
    /// Nonzero constants only.
    const std::vector<Term>& terms() const noexcept { return terms_; }

    /// Throws UnitAxiomError naming (k, p) and the side on the first failure.
    void check_unit() const;
    /// Exhaustive over basis triples; throws AssociativityError naming (i, j, k, p).
    void check_associative() const;

    bool same_table(const AlgebraSpec& other) const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Scalar> constants_;
    std::vector<Term> terms_;
    std::optional<std::size_t> unit_;
    bool associative_;
};

using Algebra = std::shared_ptr<const AlgebraSpec>;

/// Validates and freezes a spec. Runs check_unit() when unit_index is set and
/// check_associative() when the associative flag is set.
Algebra make_algebra(std::string name, std::vector<std::string> basis_labels, std::vector<Scalar> constants,
                     std::optional<std::size_t> unit_index, bool associative);

/// Real quaternions: basis 1, i, j, k with i^2 = j^2 = k^2 = ijk = -1.
Algebra builtin_quaternion();
/// Complex numbers over the reals: basis 1, i with i^2 = -1.
Algebra builtin_complex();

/// True when both handles denote the same multiplication table.
bool same_algebra(const Algebra& a, const Algebra& b);

// An A-number: coordinates x^0 .. x^{n-1} relative to the basis of an algebra.
class Element {
public:
    Element(Algebra algebra, std::vector<Scalar> coords);

    static Element zero(const Algebra& algebra);
    static Element basis(const Algebra& algebra, std::size_t index);
    /// Requires a declared unit.
    static Element one(const Algebra& algebra);
    static Element scalar(const Algebra& algebra, const Scalar& s);

    const Algebra& algebra() const noexcept { return algebra_; }
    std::size_t dim() const noexcept { return coords_.size(); }
    const std::vector<Scalar>& coords() const noexcept { return coords_; }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const;
    bool is_zero(double tol) const;
    Element to_backend(Backend b) const;

    Element operator-() const;
    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const Scalar& s);

    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
    friend Element operator*(Element lhs, const Scalar& s) { return lhs *= s; }
    friend Element operator*(const Scalar& s, Element rhs) { return rhs *= s; }
    friend Element operator*(const Element& lhs, const Element& rhs);

    /// Exact coordinatewise equality (same algebra required).
    friend bool operator==(const Element& lhs, const Element& rhs);

private:
    Algebra algebra_;
    std::vector<Scalar> coords_;
};

/// (xy)^p = sum_{k,l} C^p_{kl} x^k y^l
Element mul(const Element& x, const Element& y);
Element linear_combine(std::span<const std::pair<Scalar, Element>> terms);
/// xy - yx
Element commutator(const Element& x, const Element& y);
/// (xy)z - x(yz)
Element associator(const Element& x, const Element& y, const Element& z);

bool approx_equal(const Element& a, const Element& b, double tol);
/// Euclidean norm of the coordinate difference, in double precision.
double coord_distance(const Element& a, const Element& b);

/// Human-readable basis-word form, e.g. "1+2i-3k". Zero prints as "0".
std::string format_element(const Element& x);

} // namespace ncalg

#endif
