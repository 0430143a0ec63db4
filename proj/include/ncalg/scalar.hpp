#ifndef NCALG_SCALAR_HPP
#define NCALG_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace ncalg {

enum class Backend { Rational, Float };

/*
 * Scalar of the ground ring.
 *
 * Holds either an exact rational (GMP, always canonical: den > 0, reduced)
 * or a binary64 value. Arithmetic between two rationals stays exact; any
 * operation touching a float yields a float. Equality via operator== is
 * exact on both backends; use approx_equal / is_zero(tol) for tolerance
 * comparisons on floats.
 */
class Scalar {
public:
    Scalar() : value_(mpq_class(0)) {}
    Scalar(long v) : value_(mpq_class(v)) {}           // NOLINT(implicit)
    Scalar(int v) : value_(mpq_class(v)) {}            // NOLINT(implicit)
    Scalar(double v) : value_(v) {}                    // NOLINT(implicit)
    Scalar(mpq_class v) : value_(std::move(v)) { std::get<mpq_class>(value_).canonicalize(); }

    static Scalar rational(long num, long den);
    /// Parses "7", "-3/4", "0.25" (decimal read exactly) or "1e-3" (float).
    static Scalar parse(std::string_view text, Backend backend = Backend::Rational);

    bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(value_); }
    bool is_float() const noexcept { return !is_rational(); }
    Backend backend() const noexcept { return is_rational() ? Backend::Rational : Backend::Float; }

    const mpq_class& as_rational() const;
    double to_double() const;
    Scalar to_backend(Backend b) const;

    bool is_zero() const;
    bool is_zero(double tol) const;
    int sign() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const Scalar& lhs, const Scalar& rhs);
    friend bool operator<(const Scalar& lhs, const Scalar& rhs);
    friend bool operator>(const Scalar& lhs, const Scalar& rhs) { return rhs < lhs; }
    friend bool operator<=(const Scalar& lhs, const Scalar& rhs) { return !(rhs < lhs); }
    friend bool operator>=(const Scalar& lhs, const Scalar& rhs) { return !(lhs < rhs); }

    /// "3", "-1/2" for rationals; shortest round-trip decimal for floats.
    std::string to_string() const;

private:
    std::variant<mpq_class, double> value_;
};

bool approx_equal(const Scalar& a, const Scalar& b, double tol);

/// Square root; exact when the argument is a rational square, float otherwise.
/// Throws std::domain_error for negative arguments.
Scalar sqrt(const Scalar& s);

Scalar abs(const Scalar& s);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace ncalg

#endif
