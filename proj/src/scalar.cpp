#include "ncalg/scalar.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ncalg {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

std::string_view strip_sign(std::string_view s, bool& negative) {
    negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    return s;
}

} // namespace

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::parse(std::string_view text, Backend backend) {
    bool negative = false;
    std::string_view body = strip_sign(text, negative);
    if (body.empty()) throw std::invalid_argument("empty number");

    Scalar result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash);
        std::string_view den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        const mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        mpq_class q{n, d};
        q.canonicalize();
        result = Scalar(std::move(q));
    } else if (body.find_first_of("eE") != std::string_view::npos) {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
        if (ec != std::errc() || ptr != body.data() + body.size())
            throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        result = Scalar(v);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view ip = body.substr(0, dot);
        std::string_view fp = body.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
            throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        std::string digits = std::string(ip) + std::string(fp);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        result = Scalar(mpq_class(mpz_class(digits.empty() ? "0" : digits, 10), den));
    } else {
        if (!all_digits(body)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        result = Scalar(mpq_class(mpz_class(std::string(body), 10)));
    }
    if (negative) result = -result;
    return result.to_backend(backend == Backend::Float ? Backend::Float : result.backend());
}

const mpq_class& Scalar::as_rational() const {
    if (!is_rational()) throw std::logic_error("scalar is not rational");
    return std::get<mpq_class>(value_);
}

double Scalar::to_double() const {
    if (is_rational()) return std::get<mpq_class>(value_).get_d();
    return std::get<double>(value_);
}

Scalar Scalar::to_backend(Backend b) const {
    if (b == Backend::Float) return Scalar(to_double());
    if (is_rational()) return *this;
    double v = std::get<double>(value_);
    if (!std::isfinite(v)) throw std::domain_error("non-finite float cannot become rational");
    return Scalar(mpq_class(v));
}

bool Scalar::is_zero() const {
    if (is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<double>(value_) == 0.0;
}

bool Scalar::is_zero(double tol) const {
    if (is_rational()) return is_zero();
    return std::abs(std::get<double>(value_)) <= tol;
}

int Scalar::sign() const {
    if (is_rational()) return sgn(std::get<mpq_class>(value_));
    double v = std::get<double>(value_);
    return (v > 0) - (v < 0);
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(mpq_class(-std::get<mpq_class>(value_)));
    return Scalar(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (is_rational() && rhs.is_rational())
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    else
        value_ = to_double() + rhs.to_double();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    if (is_rational() && rhs.is_rational())
        std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
    else
        value_ = to_double() - rhs.to_double();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (is_rational() && rhs.is_rational())
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    else
        value_ = to_double() * rhs.to_double();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (is_rational() && rhs.is_rational()) {
        if (rhs.is_zero()) throw std::domain_error("division by zero");
        std::get<mpq_class>(value_) /= std::get<mpq_class>(rhs.value_);
    } else {
        value_ = to_double() / rhs.to_double();
    }
    return *this;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.is_rational() && rhs.is_rational())
        return std::get<mpq_class>(lhs.value_) == std::get<mpq_class>(rhs.value_);
    return lhs.to_double() == rhs.to_double();
}

bool operator<(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.is_rational() && rhs.is_rational())
        return std::get<mpq_class>(lhs.value_) < std::get<mpq_class>(rhs.value_);
    return lhs.to_double() < rhs.to_double();
}

std::string Scalar::to_string() const {
    if (is_rational()) return std::get<mpq_class>(value_).get_str();
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
    return std::string(buf, ptr);
}

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
    if (a.is_rational() && b.is_rational()) return a == b;
    return std::abs(a.to_double() - b.to_double()) <= tol;
}

Scalar sqrt(const Scalar& s) {
    if (s.sign() < 0) throw std::domain_error("square root of negative scalar " + s.to_string());
    if (s.is_rational()) {
        const mpq_class& q = s.as_rational();
        if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
            mpz_class num, den;
            mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
            mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
            return Scalar(mpq_class(num, den));
        }
    }
    return Scalar(std::sqrt(s.to_double()));
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace ncalg
