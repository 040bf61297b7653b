#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "quadfermat/quad.hpp"

namespace quadfermat {

/// Re and Im of (a + b*sqrt(d))^p.
struct PowerParts {
    BigRational re_part;
    BigRational im_part;
};

/// Binomial-sum evaluation
///   Re = sum_k C(p,2k)   a^(p-2k)   b^(2k)   d^k
///   Im = sum_k C(p,2k+1) a^(p-2k-1) b^(2k+1) d^k
/// Any positive exponent is accepted.
inline PowerParts power_parts(const BigRational& a, const BigRational& b, std::int64_t d, std::uint64_t p) {
    validate_disc(d);
    if (p == 0) throw DomainError("power_parts: exponent must be positive");
    // a_pows[i] = a^i, bd[j] = b^j with the d^(j/2) factor folded in for even/odd split.
    std::vector<BigRational> a_pows(p + 1), b_pows(p + 1);
    a_pows[0] = 1;
    b_pows[0] = 1;
    for (std::uint64_t i = 1; i <= p; ++i) {
        a_pows[i] = a_pows[i - 1] * a;
        b_pows[i] = b_pows[i - 1] * b;
    }
    PowerParts out{0, 0};
    BigInt binom = 1;  // C(p, j)
    BigInt d_pow = 1;  // d^(j/2)
    for (std::uint64_t j = 0; j <= p; ++j) {
        if (j > 0) {
            binom = binom * (p - j + 1) / j;
            if (j % 2 == 0) d_pow *= d;
        }
        BigRational term = BigRational(binom * d_pow) * a_pows[p - j] * b_pows[j];
        if (j % 2 == 0)
            out.re_part += term;
        else
            out.im_part += term;
    }
    return out;
}

enum class Component { Re, Im };

/// The structural reason a component vanishes.
enum class ForcedShape {
    ZeroBase,       // a = b = 0
    BZero,          // b = 0
    AZero,          // a = 0
    APmBDm1,        // a = +-b and d = -1
    APmBDm3,        // a = +-b and d = -3
    APm3BDm3        // a = +-3b and d = -3
};

struct VanishVerdict {
    Component which;
    bool vanishes;
    std::optional<ForcedShape> forced_shape;
};

inline std::string to_string(Component c) { return c == Component::Re ? "RE" : "IM"; }

inline std::string to_string(ForcedShape s) {
    switch (s) {
        case ForcedShape::ZeroBase: return "a=b=0";
        case ForcedShape::BZero: return "b=0";
        case ForcedShape::AZero: return "a=0";
        case ForcedShape::APmBDm1: return "a=+-b and d=-1";
        case ForcedShape::APmBDm3: return "a=+-b and d=-3";
        case ForcedShape::APm3BDm3: return "a=+-3b and d=-3";
    }
    return "?";
}

/// Decides whether Re or Im of (a + b*sqrt(d))^p is zero from the closed
/// conditions alone, without expanding the power:
///
///   p = 2:  Im = 0  <=>  a = 0 or b = 0
///           Re = 0  <=>  a = +-b and d = -1
///   p = 3:  Im = 0  <=>  b = 0 or (a = +-b and d = -3)
///           Re = 0  <=>  a = 0 or (a = +-3b and d = -3)
///   p > 3:  Im = 0  <=>  b = 0
///           Re = 0  <=>  a = 0
///
/// Rational inputs are first scaled to the integer pair (a1*b2, a2*b1),
/// which multiplies the base by the nonzero rational a2*b2.
inline VanishVerdict vanish_decide(Component which, const BigRational& a, const BigRational& b, std::int64_t d,
                                   std::uint64_t p) {
    validate_disc(d);
    if (!is_prime(BigInt(p))) throw DomainError("vanish_decide: exponent " + std::to_string(p) + " is not prime");

    const BigInt x = num(a) * den(b);
    const BigInt y = den(a) * num(b);

    auto yes = [which](ForcedShape s) { return VanishVerdict{which, true, s}; };
    const VanishVerdict no{which, false, std::nullopt};

    if (x == 0 && y == 0) return yes(ForcedShape::ZeroBase);
    const bool pm_b = abs(x) == abs(y);

    if (which == Component::Im) {
        if (y == 0) return yes(ForcedShape::BZero);
        if (p == 2 && x == 0) return yes(ForcedShape::AZero);
        if (p == 3 && d == -3 && pm_b) return yes(ForcedShape::APmBDm3);
        return no;
    }
    if (p == 2) return (d == -1 && pm_b) ? yes(ForcedShape::APmBDm1) : no;
    if (x == 0) return yes(ForcedShape::AZero);
    if (p == 3 && d == -3 && abs(x) == 3 * abs(y)) return yes(ForcedShape::APm3BDm3);
    return no;
}

enum class PowerClass { InQ, PureSqrtD, Mixed };

inline std::string to_string(PowerClass c) {
    switch (c) {
        case PowerClass::InQ: return "IN_Q";
        case PowerClass::PureSqrtD: return "PURE_SQRT_D";
        case PowerClass::Mixed: return "MIXED";
    }
    return "?";
}

/// Where e^p lives: Q, Q*sqrt(d), or neither.
inline PowerClass rational_power_test(const QuadElem& e, std::uint64_t p) {
    if (vanish_decide(Component::Im, e.re(), e.im(), e.disc(), p).vanishes) return PowerClass::InQ;
    if (vanish_decide(Component::Re, e.re(), e.im(), e.disc(), p).vanishes) return PowerClass::PureSqrtD;
    return PowerClass::Mixed;
}

}  // namespace quadfermat
