#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "quadfermat/errors.hpp"

namespace quadfermat {

using BigInt = boost::multiprecision::cpp_int;

// Canonical rational: always reduced, denominator > 0, zero is 0/1.
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt num(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const BigRational& q) { return den(q) == 1; }

inline BigRational make_rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw ArithmeticError("rational with zero denominator");
    return BigRational(n, d);
}

inline BigInt abs(const BigInt& n) { return n < 0 ? BigInt(-n) : n; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(abs(a), abs(b));
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a) / gcd(a, b) * abs(b);
}

template <class T>
T pow_by_squaring(T base, std::uint64_t k) {
    T result(1);
    while (k != 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k != 0) base *= base;
    }
    return result;
}

inline BigInt ipow(const BigInt& base, std::uint64_t k) { return pow_by_squaring(base, k); }
inline BigRational rpow(const BigRational& base, std::uint64_t k) { return pow_by_squaring(base, k); }

// Floor division for signed big integers (cpp_int `/` truncates).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw ArithmeticError("division by zero");
    BigInt q = a / b;
    BigInt r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
    return q;
}

// "n" or "n/m" with m > 0.
inline std::string to_string(const BigRational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

inline BigInt parse_int(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw DomainError("empty integer literal");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw DomainError("bad integer literal '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s);
}

inline BigRational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace quadfermat
