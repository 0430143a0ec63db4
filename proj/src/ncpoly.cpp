#include "ncalg/ncpoly.hpp"

#include "ncalg/errors.hpp"

#include <sstream>

namespace ncalg {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("monomial needs at least one coefficient");
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!same_algebra(coeffs_[0].algebra(), coeffs_[i].algebra())) throw AlgebraMismatch();
}

bool Monomial::has_zero_coeff() const {
    for (const auto& a : coeffs_)
        if (a.is_zero()) return true;
    return false;
}

Element Monomial::eval(const Element& x0) const {
    if (!same_algebra(algebra(), x0.algebra())) throw AlgebraMismatch();
    Element acc = coeffs_.front();
    for (std::size_t i = 1; i < coeffs_.size(); ++i) acc = mul(mul(acc, x0), coeffs_[i]);
    return acc;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
    std::vector<Element> out;
    out.reserve(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    out.insert(out.end(), lhs.coeffs_.begin(), lhs.coeffs_.end() - 1);
    out.push_back(mul(lhs.coeffs_.back(), rhs.coeffs_.front()));
    out.insert(out.end(), rhs.coeffs_.begin() + 1, rhs.coeffs_.end());
    return Monomial(std::move(out));
}

// ------------------------------------------------------------- CoeffTensor

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

bool CoeffTensor::fits(std::size_t dim, std::size_t degree) {
    std::size_t r = 1;
    for (std::size_t i = 0; i <= degree; ++i) {
        r *= dim;
        if (r > max_entries) return false;
    }
    return true;
}

CoeffTensor::CoeffTensor(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {
    if (!fits(dim, degree))
        throw DegreeCapExceeded("degree " + std::to_string(degree) + " tensor over dim " + std::to_string(dim) +
                                " exceeds the dense cap");
    data_.resize(ipow(dim, degree + 1));
}

CoeffTensor::CoeffTensor(std::size_t dim, std::size_t degree, std::vector<Scalar> data)
    : dim_(dim), degree_(degree), data_(std::move(data)) {
    if (data_.size() != ipow(dim, degree + 1)) throw ShapeError("tensor data has the wrong number of entries");
}

CoeffTensor CoeffTensor::of(const Monomial& m) {
    CoeffTensor t(m.algebra()->dim(), m.degree());
    t.accumulate(m);
    return t;
}

const Scalar& CoeffTensor::at(const std::vector<std::size_t>& index) const {
    if (index.size() != degree_ + 1) throw ShapeError("tensor index has the wrong arity");
    std::size_t flat = 0;
    for (auto i : index) flat = flat * dim_ + i;
    return data_.at(flat);
}

std::vector<std::size_t> CoeffTensor::unflatten(std::size_t flat) const {
    std::vector<std::size_t> idx(degree_ + 1);
    for (std::size_t s = degree_ + 1; s-- > 0;) {
        idx[s] = flat % dim_;
        flat /= dim_;
    }
    return idx;
}

bool CoeffTensor::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

CoeffTensor& CoeffTensor::operator+=(const CoeffTensor& rhs) {
    if (rhs.dim_ != dim_ || rhs.degree_ != degree_) throw ShapeError("tensor shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

void CoeffTensor::accumulate(const Monomial& m) {
    if (m.degree() != degree_ || m.algebra()->dim() != dim_) throw ShapeError("monomial does not match tensor shape");
    // Running outer product over nonzero coordinates only.
    std::vector<std::pair<std::size_t, Scalar>> partial{{0, Scalar(1)}};
    for (const auto& a : m.coeffs()) {
        std::vector<std::pair<std::size_t, Scalar>> next;
        for (const auto& [flat, w] : partial)
            for (std::size_t i = 0; i < dim_; ++i)
                if (!a[i].is_zero()) next.emplace_back(flat * dim_ + i, w * a[i]);
        partial = std::move(next);
        if (partial.empty()) return;
    }
    for (const auto& [flat, w] : partial) data_[flat] += w;
}

// ------------------------------------------------------------ NcPolynomial

NcPolynomial::NcPolynomial(Algebra algebra, std::vector<Monomial> monomials)
    : algebra_(std::move(algebra)), monomials_(std::move(monomials)) {
    for (const auto& m : monomials_)
        if (!same_algebra(algebra_, m.algebra())) throw AlgebraMismatch();
    const std::size_t n = algebra_->dim();
    tensors_.resize(monomials_.empty() ? 0 : raw_degree() + 1);
    for (std::size_t k = 0; k < tensors_.size(); ++k)
        if (CoeffTensor::fits(n, k)) tensors_[k].emplace(n, k);
    for (const auto& m : monomials_)
        if (auto& t = tensors_[m.degree()]) t->accumulate(m);
}

std::size_t NcPolynomial::raw_degree() const {
    std::size_t d = 0;
    for (const auto& m : monomials_) d = std::max(d, m.degree());
    return d;
}

NcPolynomial NcPolynomial::constant(const Element& a) { return NcPolynomial(a.algebra(), {Monomial::constant(a)}); }

NcPolynomial NcPolynomial::variable(const Algebra& algebra) {
    const Element one = Element::one(algebra);
    return NcPolynomial(algebra, {Monomial({one, one})});
}

NcPolynomial NcPolynomial::from_tensor(const Algebra& algebra, const CoeffTensor& t) {
    if (t.dim() != algebra->dim()) throw ShapeError("tensor dim does not match algebra");
    std::vector<Monomial> monos;
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        if (t[flat].is_zero()) continue;
        auto idx = t.unflatten(flat);
        std::vector<Element> coeffs;
        coeffs.reserve(idx.size());
        coeffs.push_back(Element::basis(algebra, idx[0]) * t[flat]);
        for (std::size_t s = 1; s < idx.size(); ++s) coeffs.push_back(Element::basis(algebra, idx[s]));
        monos.emplace_back(std::move(coeffs));
    }
    return NcPolynomial(algebra, std::move(monos));
}

int NcPolynomial::degree() const {
    for (std::size_t k = tensors_.size(); k-- > 0;) {
        if (!tensors_[k]) {
            for (const auto& m : monomials_)
                if (m.degree() == k && !m.has_zero_coeff()) return static_cast<int>(k);
            continue;
        }
        if (!tensors_[k]->is_zero()) return static_cast<int>(k);
    }
    return -1;
}

CoeffTensor NcPolynomial::canonical_tensor(std::size_t k) const {
    if (k < tensors_.size()) {
        if (!tensors_[k])
            throw DegreeCapExceeded("degree " + std::to_string(k) + " exceeds the dense tensor cap");
        return *tensors_[k];
    }
    return CoeffTensor(algebra_->dim(), k);
}

NcPolynomial NcPolynomial::canonical() const {
    std::vector<Monomial> monos;
    for (std::size_t k = 0; k < tensors_.size(); ++k) {
        if (!tensors_[k])
            throw DegreeCapExceeded("degree " + std::to_string(k) + " exceeds the dense tensor cap");
        auto part = from_tensor(algebra_, *tensors_[k]);
        monos.insert(monos.end(), part.monomials_.begin(), part.monomials_.end());
    }
    return NcPolynomial(algebra_, std::move(monos));
}

Element NcPolynomial::eval(const Element& x0) const {
    if (!same_algebra(algebra_, x0.algebra())) throw AlgebraMismatch();
    Element acc = Element::zero(algebra_);
    for (const auto& m : monomials_) acc += m.eval(x0);
    return acc;
}

NcPolynomial NcPolynomial::operator-() const {
    std::vector<Monomial> out;
    out.reserve(monomials_.size());
    for (const auto& m : monomials_) {
        auto coeffs = m.coeffs();
        coeffs.front() = -coeffs.front();
        out.emplace_back(std::move(coeffs));
    }
    return NcPolynomial(algebra_, std::move(out));
}

NcPolynomial operator+(const NcPolynomial& p, const NcPolynomial& q) {
    if (!same_algebra(p.algebra_, q.algebra_)) throw AlgebraMismatch();
    std::vector<Monomial> out = p.monomials_;
    out.insert(out.end(), q.monomials_.begin(), q.monomials_.end());
    return NcPolynomial(p.algebra_, std::move(out));
}

NcPolynomial operator-(const NcPolynomial& p, const NcPolynomial& q) { return p + (-q); }

NcPolynomial operator*(const NcPolynomial& p, const NcPolynomial& q) {
    if (!same_algebra(p.algebra_, q.algebra_)) throw AlgebraMismatch();
    std::vector<Monomial> out;
    out.reserve(p.monomials_.size() * q.monomials_.size());
    for (const auto& a : p.monomials_)
        for (const auto& b : q.monomials_) out.push_back(a * b);
    return NcPolynomial(p.algebra_, std::move(out));
}

NcPolynomial operator*(const Element& a, const NcPolynomial& p) { return NcPolynomial::constant(a) * p; }

NcPolynomial operator*(const NcPolynomial& p, const Element& a) { return p * NcPolynomial::constant(a); }

bool operator==(const NcPolynomial& p, const NcPolynomial& q) {
    if (!same_algebra(p.algebra_, q.algebra_)) throw AlgebraMismatch();
    const std::size_t top = std::max(p.tensors_.size(), q.tensors_.size());
    for (std::size_t k = 0; k < top; ++k)
        if (p.canonical_tensor(k) != q.canonical_tensor(k)) return false;
    return true;
}

// --------------------------------------------------------- free functions

NcPolynomial poly_from_monomials(const Algebra& algebra, std::vector<Monomial> monomials) {
    return NcPolynomial(algebra, std::move(monomials));
}

CoeffTensor canonical_tensor(const NcPolynomial& p, std::size_t k) { return p.canonical_tensor(k); }

NcPolynomial poly_add(const NcPolynomial& p, const NcPolynomial& q) { return p + q; }

NcPolynomial poly_mul(const NcPolynomial& p, const NcPolynomial& q) { return p * q; }

Element eval(const NcPolynomial& p, const Element& x0) { return p.eval(x0); }

NcPolynomial linear_factor(const Element& c) {
    return NcPolynomial::variable(c.algebra()) - NcPolynomial::constant(c);
}

NcPolynomial expand_square(const Element& a) {
    const Algebra& alg = a.algebra();
    const Element one = Element::one(alg);
    return NcPolynomial(alg, {
                                 Monomial({one, one, one}),
                                 Monomial({a, one}),
                                 Monomial({one, a}),
                                 Monomial::constant(mul(a, a)),
                             });
}

NcPolynomial expand_cube(const Element& a) {
    const Algebra& alg = a.algebra();
    const Element one = Element::one(alg);
    const Element a2 = mul(a, a);
    return NcPolynomial(alg, {
                                 Monomial({one, one, one, one}),
                                 Monomial({a, one, one}),
                                 Monomial({one, a, one}),
                                 Monomial({one, one, a}),
                                 Monomial({a2, one}),
                                 Monomial({a, a}),
                                 Monomial({one, a2}),
                                 Monomial::constant(mul(a2, a)),
                             });
}

NcPolynomial expand_prod(const Element& a, const Element& b) {
    if (!same_algebra(a.algebra(), b.algebra())) throw AlgebraMismatch();
    const Algebra& alg = a.algebra();
    const Element one = Element::one(alg);
    return NcPolynomial(alg, {
                                 Monomial({one, one, one}),
                                 Monomial({one, b}),
                                 Monomial({a, one}),
                                 Monomial::constant(mul(a, b)),
                             });
}

std::pair<Element, Element> identity_b2_minus_a2(const Element& a, const Element& b, DifferenceOrientation orientation) {
    const Element lhs = mul(b, b) - mul(a, a);
    const Element d = b - a;
    const Element rhs = orientation == DifferenceOrientation::RightThenLeft ? mul(d, b) + mul(a, d)
                                                                            : mul(b, d) + mul(d, a);
    return {lhs, rhs};
}

NcPolynomial build_question_poly(const Element& a, const Element& b, const Element& c) {
    return linear_factor(b) * linear_factor(a) + linear_factor(a) * linear_factor(c);
}

NcPolynomial viete_expand(const Element& c, const Element& x1, const Element& x2, VietePlacement placement) {
    const Element d = Element::one(c.algebra()) - c;
    const NcPolynomial f1 = linear_factor(x1);
    const NcPolynomial f2 = linear_factor(x2);
    switch (placement) {
    case VietePlacement::Front:
        return c * (f1 * f2) + d * (f2 * f1);
    case VietePlacement::Middle:
        return (f1 * c) * f2 + (f2 * d) * f1;
    case VietePlacement::Back:
        return (f1 * f2) * c + (f2 * f1) * d;
    }
    throw std::logic_error("unknown Viete placement");
}

bool is_monic(const NcPolynomial& p) {
    if (p.degree() != 2) return false;
    const auto unit = p.algebra()->unit_index();
    if (!unit) return false;
    const CoeffTensor t = p.canonical_tensor(2);
    CoeffTensor expected(t.dim(), 2);
    expected[(*unit * t.dim() + *unit) * t.dim() + *unit] = Scalar(1);
    return t == expected;
}

std::optional<std::vector<Element>> left_coefficients(const NcPolynomial& p) {
    const Algebra& alg = p.algebra();
    const auto unit = alg->unit_index();
    if (!unit) throw MissingUnit("left-coefficient form needs a unit");
    const int deg = p.degree();
    std::vector<Element> out;
    for (int k = 0; k <= deg; ++k) {
        const CoeffTensor t = p.canonical_tensor(static_cast<std::size_t>(k));
        std::vector<Scalar> lead(alg->dim());
        for (std::size_t flat = 0; flat < t.size(); ++flat) {
            if (t[flat].is_zero()) continue;
            auto idx = t.unflatten(flat);
            for (std::size_t s = 1; s < idx.size(); ++s)
                if (idx[s] != *unit) return std::nullopt;
            lead[idx[0]] = t[flat];
        }
        out.emplace_back(alg, std::move(lead));
    }
    return out;
}

namespace {

NcPolynomial from_left_coefficients(const Algebra& alg, const std::vector<Element>& coeffs) {
    const Element one = Element::one(alg);
    std::vector<Monomial> monos;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        std::vector<Element> chain(k + 1, one);
        chain[0] = coeffs[k];
        monos.emplace_back(std::move(chain));
    }
    return NcPolynomial(alg, std::move(monos));
}

} // namespace

NcPolynomial lam_mul(const NcPolynomial& f, const NcPolynomial& g) {
    if (!same_algebra(f.algebra(), g.algebra())) throw AlgebraMismatch();
    auto fc = left_coefficients(f);
    auto gc = left_coefficients(g);
    if (!fc || !gc) throw DomainError("A[x] product needs both operands in left-coefficient form");
    const Algebra& alg = f.algebra();
    if (fc->empty() || gc->empty()) return NcPolynomial::zero(alg);
    std::vector<Element> out(fc->size() + gc->size() - 1, Element::zero(alg));
    for (std::size_t i = 0; i < fc->size(); ++i)
        for (std::size_t j = 0; j < gc->size(); ++j) out[i + j] += mul((*fc)[i], (*gc)[j]);
    return from_left_coefficients(alg, out);
}

std::string format_polynomial(const NcPolynomial& p) {
    const Algebra& alg = p.algebra();
    const auto& labels = alg->basis_labels();
    const auto unit = alg->unit_index();
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const CoeffTensor t = p.canonical_tensor(static_cast<std::size_t>(k));
        for (std::size_t flat = 0; flat < t.size(); ++flat) {
            const Scalar& c = t[flat];
            if (c.is_zero()) continue;
            auto idx = t.unflatten(flat);
            std::vector<std::string> factors;
            for (std::size_t s = 0; s < idx.size(); ++s) {
                if (s > 0) factors.emplace_back("x");
                if (!(unit && idx[s] == *unit)) factors.push_back(labels[idx[s]]);
            }
            const Scalar mag = abs(c);
            os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            if (factors.empty()) {
                os << mag.to_string();
            } else {
                if (!(mag == Scalar(1))) os << mag.to_string() << "*";
                for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
            }
            first = false;
        }
    }
    return first ? "0" : os.str();
}

} // namespace ncalg
