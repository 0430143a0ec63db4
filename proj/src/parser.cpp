#include "ncalg/parser.hpp"

#include "ncalg/errors.hpp"

#include <cctype>
#include <set>

namespace ncalg {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Algebra& algebra, Backend backend)
        : text_(text), algebra_(algebra), backend_(backend) {
        std::set<std::string> seen;
        for (const auto& label : algebra_->basis_labels()) {
            if (label == "x") throw ParseError("basis label 'x' clashes with the variable", 1, 1);
            if (!seen.insert(label).second) throw ParseError("basis label '" + label + "' is ambiguous", 1, 1);
        }
    }

    NcPolynomial parse() {
        NcPolynomial p = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NcPolynomial expr() {
        NcPolynomial acc = term();
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    NcPolynomial term() {
        NcPolynomial acc = unary();
        while (accept('*')) acc = acc * unary();
        return acc;
    }

    NcPolynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    NcPolynomial power() {
        skip_ws();
        const std::size_t start = pos_;
        NcPolynomial base = primary();
        if (!accept('^')) return base;
        if (!base_is_variable_) fail_at("exponents are only allowed on x", start);
        skip_ws();
        const std::size_t digits_at = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (digits_at == pos_) fail("expected a non-negative integer exponent");
        const unsigned long e = std::stoul(std::string(text_.substr(digits_at, pos_ - digits_at)));
        if (e > 64) fail_at("exponent too large", digits_at);
        NcPolynomial out = NcPolynomial::constant(Element::one(algebra_));
        for (unsigned long i = 0; i < e; ++i) out = out * base;
        return out;
    }

    bool is_ident_start(char c) const { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    bool is_ident(char c) const { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    std::string_view identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident(text_[pos_])) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    // True when a basis label starts at `at` (so "2e1" is 2*e1, not 20).
    bool label_at(std::size_t at) const {
        std::size_t end = at;
        while (end < text_.size() && is_ident(text_[end])) ++end;
        const std::string_view name = text_.substr(at, end - at);
        for (const auto& label : algebra_->basis_labels())
            if (label == name) return true;
        return false;
    }

    Element label_element(std::string_view name, std::size_t at) {
        const auto& labels = algebra_->basis_labels();
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == name) return Element::basis(algebra_, i);
        std::string msg = "unknown symbol '" + std::string(name) + "'";
        if (name.size() > 1) msg += " (products need an explicit '*')";
        fail_at(msg, at);
    }

    Scalar number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            const std::size_t s = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return pos_ > s;
        };
        bool any = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            any = digits() || any;
        }
        if (!any) fail_at("expected a number", start);
        if (!label_at(pos_) && pos_ + 1 < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E') &&
            (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) ||
             ((text_[pos_ + 1] == '-' || text_[pos_ + 1] == '+') && pos_ + 2 < text_.size() &&
              std::isdigit(static_cast<unsigned char>(text_[pos_ + 2]))))) {
            pos_ += 2;
            digits();
        } else if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            if (!digits()) fail("expected denominator digits after '/'");
        }
        try {
            return Scalar::parse(text_.substr(start, pos_ - start), backend_);
        } catch (const std::exception& e) {
            fail_at(e.what(), start);
        }
    }

    Scalar signed_number() {
        skip_ws();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
            skip_ws();
        }
        Scalar s = number();
        return negative ? -s : s;
    }

    bool tuple_ahead() const {
        int depth = 0;
        for (std::size_t i = pos_; i < text_.size(); ++i) {
            char c = text_[i];
            if (c == '(') ++depth;
            else if (c == ')') {
                if (depth == 0) return false;
                --depth;
            } else if (c == ',' && depth == 0) return true;
        }
        return false;
    }

    NcPolynomial primary() {
        base_is_variable_ = false;
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const std::size_t start = pos_;
        const char c = text_[pos_];

        if (c == '(') {
            ++pos_;
            if (tuple_ahead()) {
                std::vector<Scalar> coords;
                do {
                    coords.push_back(signed_number());
                } while (accept(','));
                if (!accept(')')) fail("expected ',' or ')' in coordinate tuple");
                if (coords.size() != algebra_->dim())
                    fail_at("coordinate tuple has " + std::to_string(coords.size()) + " entries, algebra dim is " +
                                std::to_string(algebra_->dim()),
                            start);
                return NcPolynomial::constant(Element(algebra_, std::move(coords)));
            }
            NcPolynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            base_is_variable_ = false;
            return inner;
        }

        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const Scalar s = number();
            if (pos_ < text_.size() && is_ident_start(text_[pos_])) {
                const std::size_t at = pos_;
                const std::string_view name = identifier();
                if (name == "x") return NcPolynomial::variable(algebra_) * Element::scalar(algebra_, s);
                return NcPolynomial::constant(label_element(name, at) * s);
            }
            return NcPolynomial::constant(Element::scalar(algebra_, s));
        }

        if (is_ident_start(c)) {
            const std::string_view name = identifier();
            if (name == "x") {
                base_is_variable_ = true;
                return NcPolynomial::variable(algebra_);
            }
            return NcPolynomial::constant(label_element(name, start).to_backend(backend_));
        }

        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    const Algebra& algebra_;
    Backend backend_;
    bool base_is_variable_ = false;
};

} // namespace

NcPolynomial parse_polynomial(std::string_view text, const Algebra& algebra, Backend backend) {
    return Parser(text, algebra, backend).parse();
}

Element parse_element(std::string_view text, const Algebra& algebra, Backend backend) {
    const NcPolynomial p = parse_polynomial(text, algebra, backend);
    if (p.degree() > 0) throw ParseError("expected an element, found an expression in x", 1, 1);
    return Element(algebra, p.canonical_tensor(0).data());
}

} // namespace ncalg
