#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadfermat/bigrational.hpp"
#include "quadfermat/integer.hpp"

namespace quadfermat {

/// Throws DomainError unless d is a squarefree integer other than 0 and 1.
inline void validate_disc(std::int64_t d) {
    thread_local std::int64_t last_ok = 0;
    if (d == last_ok && d != 0) return;
    if (d == 0 || d == 1) throw DomainError("discriminant must not be 0 or 1, got " + std::to_string(d));
    if (!is_squarefree(BigInt(d))) throw DomainError("discriminant " + std::to_string(d) + " is not squarefree");
    last_ok = d;
}

/// Exact element re + im*sqrt(d) of Q(sqrt(d)).
///
/// The "real" and "imaginary" parts are the rational coordinates in the
/// basis {1, sqrt(d)}, whatever the sign of d. Values are immutable.
class QuadElem {
public:
    QuadElem(BigRational re, BigRational im, std::int64_t d) : re_(std::move(re)), im_(std::move(im)), d_(d) {
        validate_disc(d);
    }

    static QuadElem rational(BigRational q, std::int64_t d) { return QuadElem(std::move(q), 0, d); }
    static QuadElem sqrt_d(std::int64_t d) { return QuadElem(0, 1, d); }

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }
    std::int64_t disc() const { return d_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }

    QuadElem operator-() const { return QuadElem(Unchecked{}, -re_, -im_, d_); }

    friend QuadElem operator+(const QuadElem& a, const QuadElem& b) {
        check_same_field(a, b);
        return QuadElem(Unchecked{}, a.re_ + b.re_, a.im_ + b.im_, a.d_);
    }
    friend QuadElem operator-(const QuadElem& a, const QuadElem& b) {
        check_same_field(a, b);
        return QuadElem(Unchecked{}, a.re_ - b.re_, a.im_ - b.im_, a.d_);
    }
    friend QuadElem operator*(const QuadElem& a, const QuadElem& b) {
        check_same_field(a, b);
        return QuadElem(Unchecked{}, a.re_ * b.re_ + a.im_ * b.im_ * a.d_, a.re_ * b.im_ + a.im_ * b.re_, a.d_);
    }
    friend QuadElem operator/(const QuadElem& a, const QuadElem& b) {
        check_same_field(a, b);
        if (b.is_zero()) throw ArithmeticError("division by zero in Q(sqrt(" + std::to_string(a.d_) + "))");
        const BigRational n = b.re_ * b.re_ - b.im_ * b.im_ * b.d_;
        const QuadElem t = a * QuadElem(Unchecked{}, b.re_, -b.im_, b.d_);
        return QuadElem(Unchecked{}, t.re_ / n, t.im_ / n, a.d_);
    }

    friend QuadElem operator*(const BigRational& q, const QuadElem& e) {
        return QuadElem(Unchecked{}, q * e.re_, q * e.im_, e.d_);
    }

    QuadElem& operator+=(const QuadElem& o) { return *this = *this + o; }
    QuadElem& operator-=(const QuadElem& o) { return *this = *this - o; }
    QuadElem& operator*=(const QuadElem& o) { return *this = *this * o; }

    friend bool operator==(const QuadElem& a, const QuadElem& b) {
        return a.d_ == b.d_ && a.re_ == b.re_ && a.im_ == b.im_;
    }

    // Lexicographic on (re, im); only meaningful within one field.
    friend bool operator<(const QuadElem& a, const QuadElem& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

private:
    struct Unchecked {};
    QuadElem(Unchecked, BigRational re, BigRational im, std::int64_t d) : re_(std::move(re)), im_(std::move(im)), d_(d) {}

    static void check_same_field(const QuadElem& a, const QuadElem& b) {
        if (a.d_ != b.d_)
            throw StructuralError("mixing Q(sqrt(" + std::to_string(a.d_) + ")) and Q(sqrt(" + std::to_string(b.d_) + "))");
    }

    friend QuadElem conj(const QuadElem& e);

    BigRational re_;
    BigRational im_;
    std::int64_t d_;
};

inline QuadElem conj(const QuadElem& e) { return QuadElem(QuadElem::Unchecked{}, e.re_, -e.im_, e.d_); }

inline BigRational norm(const QuadElem& e) { return e.re() * e.re() - e.im() * e.im() * e.disc(); }

inline BigRational trace(const QuadElem& e) { return 2 * e.re(); }

inline QuadElem pow(const QuadElem& e, std::uint64_t k) {
    QuadElem result = QuadElem::rational(1, e.disc());
    QuadElem base = e;
    while (k != 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k != 0) base *= base;
    }
    return result;
}

/// Max over both coordinates of |numerator| and denominator.
inline BigInt height(const QuadElem& e) {
    BigInt h = 0;
    for (const auto* q : {&e.re(), &e.im()}) {
        h = std::max(h, abs(num(*q)));
        h = std::max(h, den(*q));
    }
    return h;
}

/// Canonical rendering `a/b + c/e*sqrt(d)`; zero parts are omitted and the
/// zero element renders as `0`.
inline std::string to_string(const QuadElem& e) {
    const std::string root = "*sqrt(" + std::to_string(e.disc()) + ")";
    if (e.im() == 0) return to_string(e.re());
    if (e.re() == 0) return to_string(e.im()) + root;
    if (e.im() < 0) return to_string(e.re()) + " - " + to_string(BigRational(-e.im())) + root;
    return to_string(e.re()) + " + " + to_string(e.im()) + root;
}

inline std::ostream& operator<<(std::ostream& os, const QuadElem& e) { return os << to_string(e); }

namespace detail {

// Recursive-descent reader for `+ - * /`, parentheses, integer literals and
// `sqrt(k)`. Evaluates directly in Q(sqrt(d)).
class QuadParser {
public:
    QuadParser(std::string_view text, std::int64_t d) : text_(text), d_(d) {}

    QuadElem parse() {
        QuadElem v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    QuadElem expr() {
        QuadElem acc = QuadElem::rational(0, d_);
        bool first = true;
        while (true) {
            skip_ws();
            char sign = '+';
            if (peek() == '+' || peek() == '-') {
                sign = text_[pos_++];
            } else if (!first) {
                break;
            }
            QuadElem t = term();
            acc = sign == '+' ? acc + t : acc - t;
            first = false;
        }
        return acc;
    }

    QuadElem term() {
        QuadElem acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (peek() == '/') {
                ++pos_;
                acc = acc / factor();
            } else {
                return acc;
            }
        }
    }

    QuadElem factor() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            QuadElem v = expr();
            expect(')');
            return v;
        }
        if (text_.substr(pos_, 4) == "sqrt") {
            pos_ += 4;
            expect('(');
            skip_ws();
            bool neg = false;
            if (peek() == '-' || peek() == '+') neg = text_[pos_++] == '-';
            BigInt k = integer();
            if (neg) k = -k;
            expect(')');
            if (k != d_) fail("sqrt(" + k.str() + ") does not belong to Q(sqrt(" + std::to_string(d_) + "))");
            return QuadElem::sqrt_d(d_);
        }
        return QuadElem::rational(BigRational(integer()), d_);
    }

    BigInt integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw DomainError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string_view text_;
    std::int64_t d_;
    std::size_t pos_ = 0;
};

// First `sqrt(k)` argument in the text, if any.
inline std::optional<std::int64_t> sniff_disc(std::string_view text) {
    auto at = text.find("sqrt");
    if (at == std::string_view::npos) return std::nullopt;
    std::string digits;
    for (std::size_t i = text.find('(', at) + 1; i < text.size() && text[i] != ')'; ++i)
        if (!std::isspace(static_cast<unsigned char>(text[i]))) digits += text[i];
    try {
        return std::stoll(digits);
    } catch (const std::exception&) {
        throw DomainError("cannot parse '" + std::string(text) + "': bad sqrt argument");
    }
}

}  // namespace detail

/// Parses the interchange syntax (integers, `n/m`, `sqrt(d)`, `+ - * /`,
/// parentheses; whitespace-insensitive). With no explicit field the field is
/// taken from the first `sqrt(k)` in the text.
inline QuadElem parse_quad(std::string_view text, std::optional<std::int64_t> d = std::nullopt) {
    if (!d) d = detail::sniff_disc(text);
    if (!d) throw DomainError("cannot parse '" + std::string(text) + "': field unknown (no sqrt term and no d given)");
    validate_disc(*d);
    return detail::QuadParser(text, *d).parse();
}

}  // namespace quadfermat
