#include "ncalg/algebra.hpp"

#include "ncalg/errors.hpp"

#include <cmath>
#include <sstream>

namespace ncalg {

AlgebraSpec::AlgebraSpec(std::string name, std::vector<std::string> basis_labels, std::vector<Scalar> constants,
                         std::optional<std::size_t> unit_index, bool associative)
    : name_(std::move(name)), labels_(std::move(basis_labels)), constants_(std::move(constants)), unit_(unit_index),
      associative_(associative) {
    const std::size_t n = labels_.size();
    if (n == 0) throw ShapeError("algebra dimension must be positive");
    if (constants_.size() != n * n * n)
        throw ShapeError("expected " + std::to_string(n * n * n) + " structure constants for dim " + std::to_string(n) +
                         ", got " + std::to_string(constants_.size()));
    if (unit_ && *unit_ >= n) throw ShapeError("unit index " + std::to_string(*unit_) + " out of range");
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t p = 0; p < n; ++p)
                if (const Scalar& v = c(k, l, p); !v.is_zero()) terms_.push_back({k, l, p, v});
}

void AlgebraSpec::check_unit() const {
    if (!unit_) throw MissingUnit("algebra '" + name_ + "' declares no unit");
    const std::size_t n = dim();
    const std::size_t u = *unit_;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t p = 0; p < n; ++p) {
            const Scalar expected = (k == p) ? Scalar(1) : Scalar(0);
            if (c(u, k, p) != expected)
                throw UnitAxiomError("unit axiom violated: C^" + std::to_string(p) + "_{" + std::to_string(u) + "," +
                                     std::to_string(k) + "} = " + c(u, k, p).to_string() + ", expected " +
                                     expected.to_string());
            if (c(k, u, p) != expected)
                throw UnitAxiomError("unit axiom violated: C^" + std::to_string(p) + "_{" + std::to_string(k) + "," +
                                     std::to_string(u) + "} = " + c(k, u, p).to_string() + ", expected " +
                                     expected.to_string());
        }
    }
}

void AlgebraSpec::check_associative() const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t p = 0; p < n; ++p) {
                    Scalar left, right;
                    for (std::size_t q = 0; q < n; ++q) {
                        left += c(i, j, q) * c(q, k, p);
                        right += c(j, k, q) * c(i, q, p);
                    }
                    if (left != right)
                        throw AssociativityError("associativity violated for basis triple (" + std::to_string(i) +
                                                 "," + std::to_string(j) + "," + std::to_string(k) +
                                                 ") at coordinate " + std::to_string(p));
                }
}

bool AlgebraSpec::same_table(const AlgebraSpec& other) const {
    return dim() == other.dim() && unit_ == other.unit_ && constants_ == other.constants_;
}

Algebra make_algebra(std::string name, std::vector<std::string> basis_labels, std::vector<Scalar> constants,
                     std::optional<std::size_t> unit_index, bool associative) {
    auto spec = std::make_shared<const AlgebraSpec>(std::move(name), std::move(basis_labels), std::move(constants),
                                                    unit_index, associative);
    if (unit_index) spec->check_unit();
    if (associative) spec->check_associative();
    return spec;
}

namespace {

std::vector<Scalar> table_from_products(std::size_t n, const std::vector<std::vector<std::pair<int, std::size_t>>>& rows) {
    // rows[k*n + l] = (sign, p) meaning e_k e_l = sign * e_p
    std::vector<Scalar> constants(n * n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            for (auto [sign, p] : rows[k * n + l]) constants[(k * n + l) * n + p] = Scalar(sign);
    return constants;
}

} // namespace

Algebra builtin_quaternion() {
    static const Algebra h = [] {
        // e_k e_l for basis 1, i, j, k
        const std::vector<std::vector<std::pair<int, std::size_t>>> rows = {
            {{1, 0}}, {{1, 1}},  {{1, 2}},  {{1, 3}},   // 1*
            {{1, 1}}, {{-1, 0}}, {{1, 3}},  {{-1, 2}},  // i*: ii=-1 ij=k ik=-j
            {{1, 2}}, {{-1, 3}}, {{-1, 0}}, {{1, 1}},   // j*: ji=-k jj=-1 jk=i
            {{1, 3}}, {{1, 2}},  {{-1, 1}}, {{-1, 0}},  // k*: ki=j kj=-i kk=-1
        };
        return make_algebra("quaternion", {"1", "i", "j", "k"}, table_from_products(4, rows), 0, true);
    }();
    return h;
}

Algebra builtin_complex() {
    static const Algebra c = [] {
        const std::vector<std::vector<std::pair<int, std::size_t>>> rows = {
            {{1, 0}}, {{1, 1}},
            {{1, 1}}, {{-1, 0}},
        };
        return make_algebra("complex", {"1", "i"}, table_from_products(2, rows), 0, true);
    }();
    return c;
}

bool same_algebra(const Algebra& a, const Algebra& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_table(*b);
}

Element::Element(Algebra algebra, std::vector<Scalar> coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (!algebra_) throw std::invalid_argument("element without algebra");
    if (coords_.size() != algebra_->dim())
        throw ShapeError("element has " + std::to_string(coords_.size()) + " coordinates, algebra dim is " +
                         std::to_string(algebra_->dim()));
}

Element Element::zero(const Algebra& algebra) { return Element(algebra, std::vector<Scalar>(algebra->dim())); }

Element Element::basis(const Algebra& algebra, std::size_t index) {
    if (index >= algebra->dim()) throw ShapeError("basis index " + std::to_string(index) + " out of range");
    std::vector<Scalar> coords(algebra->dim());
    coords[index] = Scalar(1);
    return Element(algebra, std::move(coords));
}

Element Element::one(const Algebra& algebra) {
    if (!algebra->unit_index()) throw MissingUnit("algebra '" + algebra->name() + "' declares no unit");
    return basis(algebra, *algebra->unit_index());
}

Element Element::scalar(const Algebra& algebra, const Scalar& s) { return one(algebra) * s; }

bool Element::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool Element::is_zero(double tol) const {
    for (const auto& c : coords_)
        if (!c.is_zero(tol)) return false;
    return true;
}

Element Element::to_backend(Backend b) const {
    std::vector<Scalar> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(c.to_backend(b));
    return Element(algebra_, std::move(out));
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
}

Element& Element::operator+=(const Element& rhs) {
    if (!same_algebra(algebra_, rhs.algebra_)) throw AlgebraMismatch();
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    if (!same_algebra(algebra_, rhs.algebra_)) throw AlgebraMismatch();
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
    return *this;
}

Element& Element::operator*=(const Scalar& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

Element operator*(const Element& lhs, const Element& rhs) { return mul(lhs, rhs); }

bool operator==(const Element& lhs, const Element& rhs) {
    if (!same_algebra(lhs.algebra_, rhs.algebra_)) throw AlgebraMismatch();
    return lhs.coords_ == rhs.coords_;
}

Element mul(const Element& x, const Element& y) {
    if (!same_algebra(x.algebra(), y.algebra())) throw AlgebraMismatch();
    const auto& spec = *x.algebra();
    std::vector<Scalar> out(spec.dim());
    for (const auto& t : spec.terms()) {
        const Scalar& xk = x[t.k];
        if (xk.is_zero()) continue;
        const Scalar& yl = y[t.l];
        if (yl.is_zero()) continue;
        out[t.p] += t.c * xk * yl;
    }
    return Element(x.algebra(), std::move(out));
}

Element linear_combine(std::span<const std::pair<Scalar, Element>> terms) {
    if (terms.empty()) throw std::invalid_argument("linear_combine needs at least one term");
    Element out = Element::zero(terms.front().second.algebra());
    for (const auto& [s, x] : terms) out += x * s;
    return out;
}

Element commutator(const Element& x, const Element& y) { return mul(x, y) - mul(y, x); }

Element associator(const Element& x, const Element& y, const Element& z) {
    return mul(mul(x, y), z) - mul(x, mul(y, z));
}

bool approx_equal(const Element& a, const Element& b, double tol) {
    if (!same_algebra(a.algebra(), b.algebra())) throw AlgebraMismatch();
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!approx_equal(a[i], b[i], tol)) return false;
    return true;
}

double coord_distance(const Element& a, const Element& b) {
    if (!same_algebra(a.algebra(), b.algebra())) throw AlgebraMismatch();
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        double d = a[i].to_double() - b[i].to_double();
        s += d * d;
    }
    return std::sqrt(s);
}

std::string format_element(const Element& x) {
    const auto& labels = x.algebra()->basis_labels();
    const auto unit = x.algebra()->unit_index();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        const Scalar& c = x[i];
        if (c.is_zero()) continue;
        Scalar mag = abs(c);
        if (c.sign() < 0)
            os << "-";
        else if (!first)
            os << "+";
        const bool is_unit = unit && *unit == i;
        std::string m = mag.to_string();
        if (is_unit) {
            os << m;
        } else {
            if (!(mag == Scalar(1))) os << m;
            os << labels[i];
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

} // namespace ncalg
