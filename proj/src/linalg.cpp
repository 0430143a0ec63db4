#include "ncalg/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace ncalg {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
    std::vector<Scalar> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

namespace {

struct Reduced {
    Matrix m;
    std::vector<std::size_t> pivot_cols;
};

bool negligible(const Scalar& v, double tol) { return v.is_rational() ? v.is_zero() : std::abs(v.to_double()) <= tol; }

// Reduced row echelon form over the first `ncols` columns; remaining
// columns (augmentation) are carried along.
Reduced rref(Matrix m, std::size_t ncols, double tol) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
        std::size_t best = m.rows();
        double best_mag = 0.0;
        for (std::size_t r = row; r < m.rows(); ++r) {
            const Scalar& v = m(r, col);
            if (negligible(v, tol)) continue;
            if (v.is_rational()) {
                best = r;
                break;
            }
            if (double mag = std::abs(v.to_double()); mag > best_mag) {
                best_mag = mag;
                best = r;
            }
        }
        if (best == m.rows()) continue;
        if (best != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));

        const Scalar pivot = m(row, col);
        for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) /= pivot;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Scalar f = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
            m(r, col) = Scalar(0);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

} // namespace

LinearSolution solve_linear(const Matrix& a, const std::vector<Scalar>& b, double tol) {
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side size mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    auto [m, pivots] = rref(std::move(aug), a.cols(), tol);

    LinearSolution sol;
    for (std::size_t r = pivots.size(); r < m.rows(); ++r)
        if (!negligible(m(r, a.cols()), tol)) return sol;
    sol.consistent = true;

    sol.particular.assign(a.cols(), Scalar(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = m(i, a.cols());

    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(a.cols());
        v[free] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

std::size_t rank(const Matrix& a, double tol) { return rref(a, a.cols(), tol).pivot_cols.size(); }

std::optional<Matrix> inverse(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = a.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n + r) = Scalar(1);
    }
    auto [m, pivots] = rref(std::move(aug), n, tol);
    if (pivots.size() != n) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = m(r, n + c);
    return inv;
}

} // namespace ncalg
