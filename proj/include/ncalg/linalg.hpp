#ifndef NCALG_LINALG_HPP
#define NCALG_LINALG_HPP

#include "ncalg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ncalg {

// Dense row-major matrix over Scalar. Small sizes only (n <= a few dozen).
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

struct LinearSolution {
    bool consistent = false;
    std::vector<Scalar> particular;           // free variables set to zero
    std::vector<std::vector<Scalar>> kernel;  // one vector per free column
};

/*
 * Gauss-Jordan elimination. Exact when every entry is rational; with float
 * entries, pivots are chosen by magnitude and |v| <= tol counts as zero.
 */
LinearSolution solve_linear(const Matrix& a, const std::vector<Scalar>& b, double tol = 1e-12);

std::size_t rank(const Matrix& a, double tol = 1e-12);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a, double tol = 1e-12);

} // namespace ncalg

#endif
