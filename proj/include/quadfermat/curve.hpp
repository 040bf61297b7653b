#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadfermat/power.hpp"
#include "quadfermat/ring.hpp"

namespace quadfermat {

/// alpha = A^2 (BC)^(p-1) / 4, the constant of Y^2 = X^p + alpha.
inline BigRational curve_constant(const BigRational& a, const BigRational& b, const BigRational& c, std::uint64_t p) {
    return a * a * rpow(b * c, p - 1) / 4;
}

/// Validated A x^p + B y^p + C z^p = 0 over Q(sqrt(d)).
struct EquationSpec {
    BigInt A, B, C;
    std::uint64_t p;
    std::int64_t d;
    BigRational alpha;
    bool pairwise_coprime;
    std::vector<std::string> warnings;

    bool bc_unit() const { return abs(B * C) == 1; }
    bool ab_unit() const { return abs(A * B) == 1; }
    bool ac_unit() const { return abs(A * C) == 1; }
};

inline EquationSpec make_equation(const BigInt& a, const BigInt& b, const BigInt& c, std::uint64_t p, std::int64_t d) {
    if (p <= 3 || !is_prime(BigInt(p))) throw ValidationError("p must be a prime > 3, got " + std::to_string(p));
    try {
        validate_disc(d);
    } catch (const DomainError& e) {
        throw ValidationError(e.what());
    }
    const std::array<std::pair<const char*, const BigInt*>, 3> coeffs{{{"A", &a}, {"B", &b}, {"C", &c}}};
    for (const auto& [name, v] : coeffs) {
        if (*v == 0) throw ValidationError(std::string(name) + " must be nonzero");
        if (!is_pth_powerfree(*v, p))
            throw ValidationError(std::string(name) + " = " + v->str() + " is not " + std::to_string(p) + "th-powerfree");
    }
    EquationSpec eq{a, b, c, p, d, curve_constant(a, b, c, p), gcd(a, b) == 1 && gcd(a, c) == 1 && gcd(b, c) == 1, {}};
    if (!eq.pairwise_coprime && eq.bc_unit()) eq.warnings.push_back("A, B, C are not pairwise coprime");
    return eq;
}

inline std::string equation_string(const EquationSpec& eq) {
    return "(A,B,C,p,d)=(" + eq.A.str() + "," + eq.B.str() + "," + eq.C.str() + "," + std::to_string(eq.p) + "," +
           std::to_string(eq.d) + ")";
}

inline QuadElem lift(const BigInt& n, std::int64_t d) { return QuadElem::rational(BigRational(n), d); }

/// A x^p + B y^p + C z^p.
inline QuadElem equation_value(const EquationSpec& eq, const QuadElem& x, const QuadElem& y, const QuadElem& z) {
    return lift(eq.A, eq.d) * pow(x, eq.p) + lift(eq.B, eq.d) * pow(y, eq.p) + lift(eq.C, eq.d) * pow(z, eq.p);
}

inline bool is_solution(const EquationSpec& eq, const QuadElem& x, const QuadElem& y, const QuadElem& z) {
    return equation_value(eq, x, y, z).is_zero();
}

// ---------------------------------------------------------------------------
// Points

enum class YClass { Rational, PureIrrational, Zero, Mixed };

inline std::string to_string(YClass c) {
    switch (c) {
        case YClass::Rational: return "Y_RATIONAL";
        case YClass::PureIrrational: return "Y_PURE_IRRATIONAL";
        case YClass::Zero: return "Y_ZERO";
        case YClass::Mixed: return "Y_MIXED";
    }
    return "?";
}

inline YClass y_class_of(const QuadElem& y) {
    if (y.is_zero()) return YClass::Zero;
    if (y.im() == 0) return YClass::Rational;
    if (y.re() == 0) return YClass::PureIrrational;
    return YClass::Mixed;
}

struct CurvePoint {
    QuadElem X, Y;
    YClass y_class;
};

inline CurvePoint make_point(QuadElem x, QuadElem y) {
    const YClass c = y_class_of(y);
    return {std::move(x), std::move(y), c};
}

/// X = -BCyz/x^2,  Y = (-BC)^((p-1)/2) (B y^p - C z^p) / (2 x^p).
/// Coefficients may be any elements of K; no solution check is made.
inline CurvePoint forward_map_raw(const QuadElem& b, const QuadElem& c, std::uint64_t p, const QuadElem& x,
                                  const QuadElem& y, const QuadElem& z) {
    if (x.is_zero()) throw DomainError("forward_map: x must be nonzero");
    const QuadElem X = -(b * c * y * z) / (x * x);
    const QuadElem k = pow(-(b * c), (p - 1) / 2);
    const QuadElem Y = (k * (b * pow(y, p) - c * pow(z, p))) / (QuadElem::rational(2, x.disc()) * pow(x, p));
    return make_point(X, Y);
}

inline CurvePoint forward_map_raw(const BigRational& b, const BigRational& c, std::uint64_t p, const QuadElem& x,
                                  const QuadElem& y, const QuadElem& z) {
    const std::int64_t d = x.disc();
    return forward_map_raw(QuadElem::rational(b, d), QuadElem::rational(c, d), p, x, y, z);
}

inline bool on_curve(const EquationSpec& eq, const CurvePoint& pt) {
    return pt.Y * pt.Y - pow(pt.X, eq.p) == QuadElem::rational(eq.alpha, eq.d);
}

inline CurvePoint forward_map(const EquationSpec& eq, const QuadElem& x, const QuadElem& y, const QuadElem& z) {
    if (x.is_zero()) throw DomainError("forward_map: x must be nonzero");
    if (!is_solution(eq, x, y, z))
        throw ContractViolation("forward_map: (" + to_string(x) + ", " + to_string(y) + ", " + to_string(z) +
                                ") does not satisfy " + equation_string(eq));
    return forward_map_raw(BigRational(eq.B), BigRational(eq.C), eq.p, x, y, z);
}

/// What the point says about any nontrivial solution it could come from.
enum class Prediction {
    PrimitiveIntegerSolution,   // Y rational: a primitive solution in Z exists
    ConjugateUnit,              // Y = n sqrt(d): BC = +-1 and y = u conj(z)
    UnitTriple,                 // Y = 0: A = +-2, BC = +-1, (x,y,z) = (+-1,+-1,1)
    NotFromNontrivialSolution   // Y mixed: mn != 0 never comes from a solution
};

inline std::string to_string(Prediction p) {
    switch (p) {
        case Prediction::PrimitiveIntegerSolution: return "PRIMITIVE_INTEGER_SOLUTION";
        case Prediction::ConjugateUnit: return "BC_PM1_CONJUGATE_UNIT";
        case Prediction::UnitTriple: return "A_PM2_BC_PM1_UNIT_TRIPLE";
        case Prediction::NotFromNontrivialSolution: return "NOT_FROM_NONTRIVIAL_SOLUTION";
    }
    return "?";
}

struct PointClassification {
    YClass y_class;
    Prediction prediction;
    // X in Q; must equal (y_class != Mixed).
    bool x_rational;
    // The equation's coefficients meet the conditions the prediction puts on
    // them (false for Mixed: no nontrivial solution can map there).
    bool coefficients_match;
};

inline PointClassification classify_point(const EquationSpec& eq, const CurvePoint& pt) {
    if (!on_curve(eq, pt))
        throw ContractViolation("classify_point: (" + to_string(pt.X) + ", " + to_string(pt.Y) + ") is not on the curve");
    const YClass c = y_class_of(pt.Y);
    PointClassification out{c, Prediction::PrimitiveIntegerSolution, pt.X.is_rational(), true};
    switch (c) {
        case YClass::Rational: break;
        case YClass::PureIrrational:
            out.prediction = Prediction::ConjugateUnit;
            out.coefficients_match = eq.bc_unit();
            break;
        case YClass::Zero:
            out.prediction = Prediction::UnitTriple;
            out.coefficients_match = abs(eq.A) == 2 && eq.bc_unit();
            break;
        case YClass::Mixed:
            out.prediction = Prediction::NotFromNontrivialSolution;
            out.coefficients_match = false;
            break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Solutions

enum class SolutionClass { TrivialZero, TrivialAbUnit, Rational, RationalPrimitiveInt, ConjugateUnit, Generic };

inline std::string to_string(SolutionClass c) {
    switch (c) {
        case SolutionClass::TrivialZero: return "TRIVIAL_ZERO";
        case SolutionClass::TrivialAbUnit: return "TRIVIAL_AB_UNIT";
        case SolutionClass::Rational: return "RATIONAL";
        case SolutionClass::RationalPrimitiveInt: return "RATIONAL_PRIMITIVE_INT";
        case SolutionClass::ConjugateUnit: return "CONJUGATE_UNIT";
        case SolutionClass::Generic: return "GENERIC";
    }
    return "?";
}

struct SolutionTriple {
    QuadElem x, y, z;
    SolutionClass cls;
    // For ConjugateUnit: u with y/x = u * conj(z/x).
    std::optional<QuadElem> unit;
};

inline bool is_nontrivial(const QuadElem& x, const QuadElem& y, const QuadElem& z) {
    return !x.is_zero() && !y.is_zero() && !z.is_zero();
}

/// For a solution with exactly one zero component, names the coefficient pair
/// ("AB", "AC" or "BC") that carries it when the shape is the unit-scaled
/// (+-1, 1, 0) form: remaining components equal up to sign and the two
/// coefficients multiply to +-1.
inline std::optional<std::string> trivial_unit_shape(const EquationSpec& eq, const QuadElem& x, const QuadElem& y,
                                                     const QuadElem& z) {
    const int zeros = int(x.is_zero()) + int(y.is_zero()) + int(z.is_zero());
    if (zeros != 1) return std::nullopt;
    auto pm = [](const QuadElem& s, const QuadElem& t) { return s == t || s == -t; };
    if (z.is_zero() && pm(x, y) && eq.ab_unit()) return "AB";
    if (y.is_zero() && pm(x, z) && eq.ac_unit()) return "AC";
    if (x.is_zero() && pm(y, z) && eq.bc_unit()) return "BC";
    return std::nullopt;
}

/// True when y/x and z/x are rational, i.e. the triple is a K-multiple of a
/// rational triple.
inline bool projectively_rational(const QuadElem& x, const QuadElem& y, const QuadElem& z) {
    return (y / x).is_rational() && (z / x).is_rational();
}

/// Tags a solution. Rationality and the conjugate-unit shape are tested on the
/// x-normalised triple (1, y/x, z/x), so the class does not change when the
/// solution is scaled by an element of K.
inline SolutionTriple classify_solution(const EquationSpec& eq, const QuadElem& x, const QuadElem& y,
                                        const QuadElem& z) {
    if (!is_solution(eq, x, y, z))
        throw ContractViolation("classify_solution: (" + to_string(x) + ", " + to_string(y) + ", " + to_string(z) +
                                ") does not satisfy " + equation_string(eq));
    SolutionTriple s{x, y, z, SolutionClass::Generic, std::nullopt};
    if (x.is_zero() && y.is_zero() && z.is_zero()) {
        s.cls = SolutionClass::TrivialZero;
    } else if (!is_nontrivial(x, y, z)) {
        if (trivial_unit_shape(eq, x, y, z)) s.cls = SolutionClass::TrivialAbUnit;
    } else if (projectively_rational(x, y, z)) {
        s.cls = SolutionClass::Rational;
    } else {
        const QuadElem u = (y / x) / conj(z / x);
        if (is_unit(u)) {
            s.cls = SolutionClass::ConjugateUnit;
            s.unit = u;
        }
    }
    return s;
}

/// Primitive integer solution (+-d2, g1, +-d1) from a nontrivial solution
/// with y/x = g1/g2 and z/x = d1/d2 rational; signs are fixed by substitution.
inline SolutionTriple descend_rational(const EquationSpec& eq, const QuadElem& x, const QuadElem& y,
                                       const QuadElem& z) {
    if (!is_nontrivial(x, y, z) || !is_solution(eq, x, y, z))
        throw ContractViolation("descend_rational: input is not a nontrivial solution of " + equation_string(eq));
    const QuadElem gamma = y / x;
    const QuadElem delta = z / x;
    if (!gamma.is_rational()) throw ContractViolation("descend_rational: y/x = " + to_string(gamma) + " is not rational");
    if (!delta.is_rational()) throw ContractViolation("descend_rational: z/x = " + to_string(delta) + " is not rational");
    const BigInt g1 = num(gamma.re()), d1 = num(delta.re()), d2 = den(delta.re());
    for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
            const QuadElem a = lift(s1 * d2, eq.d), b = lift(g1, eq.d), c = lift(s2 * d1, eq.d);
            if (is_solution(eq, a, b, c)) return {a, b, c, SolutionClass::RationalPrimitiveInt, std::nullopt};
        }
    }
    throw ContractViolation("descend_rational: no solution of the form (+-" + d2.str() + ", " + g1.str() + ", +-" +
                            d1.str() + "); are A, B, C pairwise coprime and " + std::to_string(eq.p) +
                            "th-powerfree?");
}

/// Checks both identities linking m = Re(Y), n = Im(Y) to the solution:
///   2m / k          = B (y/x)^p - C (conj z / conj x)^p
///   2n sqrt(d) / k  = -C (z/x)^p + C (conj z / conj x)^p
/// with k = (-BC)^((p-1)/2).
inline bool mn_identities_hold(const EquationSpec& eq, const QuadElem& x, const QuadElem& y, const QuadElem& z) {
    const CurvePoint pt = forward_map(eq, x, y, z);
    const std::int64_t d = eq.d;
    const BigRational k = rpow(BigRational(-eq.B * eq.C), (eq.p - 1) / 2);
    const QuadElem zc = pow(conj(z) / conj(x), eq.p);
    const QuadElem lhs_m = QuadElem::rational(2 * pt.Y.re() / k, d);
    const QuadElem rhs_m = lift(eq.B, d) * pow(y / x, eq.p) - lift(eq.C, d) * zc;
    const QuadElem lhs_n = QuadElem(0, 2 * pt.Y.im() / k, d);
    const QuadElem rhs_n = lift(eq.C, d) * zc - lift(eq.C, d) * pow(z / x, eq.p);
    return lhs_m == rhs_m && lhs_n == rhs_n;
}

// ---------------------------------------------------------------------------
// ABC = +-1

enum class SpecialOrder {
    Display,    // (E^2 XY, -E X^p Y, E X Y^2)
    Alternate,  // (E^2 XY, -E X Y^2, E X^p Y)
    None
};

inline std::string to_string(SpecialOrder o) {
    switch (o) {
        case SpecialOrder::Display: return "DISPLAY";
        case SpecialOrder::Alternate: return "ALTERNATE";
        case SpecialOrder::None: return "NONE";
    }
    return "?";
}

struct SpecialMapResult {
    SpecialOrder order;
    std::optional<SolutionTriple> triple;
    // A x^p + B y^p + C z^p for each candidate order.
    QuadElem residual_display;
    QuadElem residual_alternate;
};

/// Builds a candidate solution of A x^p + B y^p + C z^p = 0 (ABC = +-1) from a
/// point of Y^2 = X^p + E with E = 2^(2p-2). Both component orders are tried
/// by substitution; when neither satisfies the equation the result carries
/// order None and no triple.
inline SpecialMapResult special_abc_unit_map(const BigInt& a, const BigInt& b, const BigInt& c, std::uint64_t p,
                                             const QuadElem& X, const QuadElem& Y) {
    if (abs(a * b * c) != 1) throw ValidationError("special_abc_unit_map: needs ABC = +-1");
    const EquationSpec eq = make_equation(a, b, c, p, X.disc());
    const std::int64_t d = X.disc();
    const BigRational E = rpow(BigRational(2), 2 * p - 2);
    if (Y * Y != pow(X, p) + QuadElem::rational(E, d))
        throw ContractViolation("special_abc_unit_map: point is not on Y^2 = X^" + std::to_string(p) + " + 2^" +
                                std::to_string(2 * p - 2));
    const QuadElem x = (E * E) * (X * Y);
    const QuadElem xpy = pow(X, p) * Y;
    const QuadElem xyy = X * Y * Y;
    const QuadElem y1 = -(E * xpy), z1 = E * xyy;
    const QuadElem y2 = -(E * xyy), z2 = E * xpy;
    SpecialMapResult r{SpecialOrder::None, std::nullopt, equation_value(eq, x, y1, z1), equation_value(eq, x, y2, z2)};
    if (r.residual_display.is_zero()) {
        r.order = SpecialOrder::Display;
        r.triple = classify_solution(eq, x, y1, z1);
    } else if (r.residual_alternate.is_zero()) {
        r.order = SpecialOrder::Alternate;
        r.triple = classify_solution(eq, x, y2, z2);
    }
    return r;
}

}  // namespace quadfermat
