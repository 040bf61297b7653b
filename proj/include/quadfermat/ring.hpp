#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "quadfermat/quad.hpp"

namespace quadfermat {

enum class OmegaKind {
    SqrtD,          // d = 2, 3 (mod 4): O_K = Z[sqrt(d)]
    HalfOnePlusSqrtD  // d = 1 (mod 4): O_K = Z[(1+sqrt(d))/2]
};

struct RingDesc {
    std::int64_t disc;
    OmegaKind omega_kind;

    friend bool operator==(const RingDesc&, const RingDesc&) = default;
};

inline RingDesc make_ring(std::int64_t d) {
    validate_disc(d);
    const auto r = ((d % 4) + 4) % 4;
    return {d, r == 1 ? OmegaKind::HalfOnePlusSqrtD : OmegaKind::SqrtD};
}

inline QuadElem omega(const RingDesc& ring) {
    if (ring.omega_kind == OmegaKind::SqrtD) return QuadElem::sqrt_d(ring.disc);
    return QuadElem(BigRational(1, 2), BigRational(1, 2), ring.disc);
}

/// u + v*omega in the integral basis {1, omega} of O_K.
struct OkElem {
    BigInt u;
    BigInt v;
    RingDesc ring;

    QuadElem to_quad() const { return QuadElem::rational(BigRational(u), ring.disc) + BigRational(v) * omega(ring); }
    bool is_zero() const { return u == 0 && v == 0; }

    friend bool operator==(const OkElem&, const OkElem&) = default;
};

inline OkElem ok_elem(BigInt u, BigInt v, std::int64_t d) { return {std::move(u), std::move(v), make_ring(d)}; }

/// Coordinates of e in the integral basis when e lies in O_K.
inline std::optional<OkElem> ok_membership(const QuadElem& e) {
    const RingDesc ring = make_ring(e.disc());
    if (ring.omega_kind == OmegaKind::SqrtD) {
        if (!is_integral(e.re()) || !is_integral(e.im())) return std::nullopt;
        return OkElem{num(e.re()), num(e.im()), ring};
    }
    // e = u + v(1+sqrt(d))/2  =>  v = 2*im, u = re - im.
    const BigRational v = 2 * e.im();
    const BigRational u = e.re() - e.im();
    if (!is_integral(v) || !is_integral(u)) return std::nullopt;
    return OkElem{num(u), num(v), ring};
}

inline OkElem to_ok(const QuadElem& e) {
    auto r = ok_membership(e);
    if (!r) throw DomainError(to_string(e) + " is not an algebraic integer");
    return *r;
}

inline BigInt norm(const OkElem& x) { return num(norm(x.to_quad())); }

inline OkElem conj(const OkElem& x) { return to_ok(conj(x.to_quad())); }

inline OkElem operator*(const OkElem& a, const OkElem& b) { return to_ok(a.to_quad() * b.to_quad()); }

inline bool is_unit(const QuadElem& e) {
    return !e.is_zero() && abs(num(norm(e))) == 1 && den(norm(e)) == 1 && ok_membership(e).has_value();
}

inline std::string omega_header(const RingDesc& ring) {
    const std::string d = std::to_string(ring.disc);
    return ring.omega_kind == OmegaKind::SqrtD ? "w = sqrt(" + d + ")" : "w = (1+sqrt(" + d + "))/2";
}

/// `u + v*w`, with zero terms dropped.
inline std::string to_string(const OkElem& x) {
    if (x.v == 0) return x.u.str();
    const std::string vw = (abs(x.v) == 1 ? std::string() : abs(x.v).str() + "*") + "w";
    if (x.u == 0) return (x.v < 0 ? "-" : "") + vw;
    return x.u.str() + (x.v < 0 ? " - " : " + ") + vw;
}

// ---------------------------------------------------------------------------
// Coprimality

/// Hermite normal form of a full-rank sublattice of Z^2, rows (a, b) and
/// (0, c) with a, c > 0 and 0 <= b < c. Index in Z^2 is a*c.
struct Hnf2 {
    BigInt a, b, c;
    BigInt index() const { return a * c; }
};

namespace detail {

// Returns (g, s, t) with s*x + t*y = g = gcd(x, y) >= 0.
inline std::tuple<BigInt, BigInt, BigInt> ext_gcd(const BigInt& x, const BigInt& y) {
    BigInt r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        std::tie(r0, r1) = std::make_tuple(r1, BigInt(r0 - q * r1));
        std::tie(s0, s1) = std::make_tuple(s1, BigInt(s0 - q * s1));
        std::tie(t0, t1) = std::make_tuple(t1, BigInt(t0 - q * t1));
    }
    if (r0 < 0) return {-r0, -s0, -t0};
    return {r0, s0, t0};
}

}  // namespace detail

/// HNF of the lattice spanned by integer vectors (u_i, v_i). Throws
/// DomainError if they do not span a rank-2 lattice.
inline Hnf2 hnf(const std::vector<std::pair<BigInt, BigInt>>& gens) {
    BigInt pu = 0, pv = 0;  // pivot row, carries gcd of first coordinates
    BigInt c = 0;           // gcd of second coordinates of rows with u = 0
    for (const auto& [wu, wv] : gens) {
        if (wu == 0) {
            c = gcd(c, wv);
            continue;
        }
        auto [g, s, t] = detail::ext_gcd(pu, wu);
        BigInt nu = s * pu + t * wu, nv = s * pv + t * wv;
        // Row with vanishing first coordinate from the unimodular complement.
        BigInt rv = (wu / g) * pv - (pu / g) * wv;
        c = gcd(c, rv);
        pu = nu;
        pv = nv;
    }
    if (pu == 0 || c == 0) throw DomainError("hnf: generators do not span a rank-2 lattice");
    if (pu < 0) {
        pu = -pu;
        pv = -pv;
    }
    BigInt b = pv % c;
    if (b < 0) b += c;
    return {pu, b, c};
}

/// HNF of the ideal (x, y) in coordinates of the integral basis.
inline Hnf2 ideal_hnf(const OkElem& x, const OkElem& y) {
    const QuadElem w = omega(x.ring);
    std::vector<std::pair<BigInt, BigInt>> gens;
    for (const OkElem* g : {&x, &y}) {
        if (g->is_zero()) continue;
        for (const QuadElem& e : {g->to_quad(), g->to_quad() * w}) {
            const OkElem o = to_ok(e);
            gens.emplace_back(o.u, o.v);
        }
    }
    return hnf(gens);
}

namespace detail {
inline void require_pair(const OkElem& x, const OkElem& y, const char* op) {
    if (x.is_zero() || y.is_zero()) throw DomainError(std::string(op) + ": zero argument");
    if (!(x.ring == y.ring)) throw StructuralError(std::string(op) + ": elements of different rings");
}
}  // namespace detail

/// (x, y) = O_K. This is the coprimality notion used throughout.
inline bool ideal_coprime(const OkElem& x, const OkElem& y) {
    detail::require_pair(x, y, "ideal_coprime");
    return ideal_hnf(x, y).index() == 1;
}

/// gcd(|N(x)|, |N(y)|) == 1. A true answer certifies ideal_coprime; the
/// converse fails (1+i, 1-i in Z[i]).
inline bool norm_coprime(const OkElem& x, const OkElem& y) {
    detail::require_pair(x, y, "norm_coprime");
    return gcd(norm(x), norm(y)) == 1;
}

/// gcd_Z(A, B) == 1, which lifts to coprimality in every O_K.
inline bool int_coprime_lift(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) throw DomainError("int_coprime_lift: zero argument");
    return gcd(a, b) == 1;
}

/// gcd_Z(A, N(y), N(z)) == 1. False means {A, y, z} fail to be pairwise
/// coprime, or coprimality cannot be certified this way.
inline bool triple_norm_condition(const BigInt& a, const OkElem& y, const OkElem& z) {
    if (a == 0) throw DomainError("triple_norm_condition: zero coefficient");
    detail::require_pair(y, z, "triple_norm_condition");
    return gcd(gcd(a, norm(y)), norm(z)) == 1;
}

// ---------------------------------------------------------------------------
// Units

/// Smallest unit > 1 of O_K for real quadratic K.
///
/// Every unit u + v*w > 1 has (u + v, v) as a convergent of w (Legendre), so
/// the continued fraction of w = (P0 + sqrt(d)) / Q0 is walked with exact
/// integer complete quotients until a convergent has norm +-1.
inline OkElem fundamental_unit(std::int64_t d) {
    if (d <= 1) throw DomainError("fundamental_unit: needs d > 1, got " + std::to_string(d));
    const RingDesc ring = make_ring(d);
    const BigInt D = d;
    const BigInt s = isqrt(D);
    const bool half = ring.omega_kind == OmegaKind::HalfOnePlusSqrtD;

    BigInt P = half ? 1 : 0, Q = half ? 2 : 1;
    // Convergent recurrence seeds: h/k = 1/0, h_prev/k_prev = 0/1.
    BigInt h = 1, h_prev = 0, k = 0, k_prev = 1;
    for (int step = 0; step < 100000; ++step) {
        const BigInt a = floor_div(P + s, Q);
        BigInt h_next = a * h + h_prev, k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
        // Candidate unit in basis coordinates.
        OkElem cand = half ? OkElem{h - k, k, ring} : OkElem{h, k, ring};
        if (k >= 1 && abs(norm(cand)) == 1) return cand;
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    throw ArithmeticError("fundamental_unit: continued fraction did not close for d=" + std::to_string(d));
}

struct UnitGroupDesc {
    std::vector<OkElem> roots_of_unity;
    std::optional<OkElem> fundamental;
};

inline UnitGroupDesc unit_group(std::int64_t d) {
    const RingDesc ring = make_ring(d);
    UnitGroupDesc g;
    g.roots_of_unity = {OkElem{1, 0, ring}, OkElem{-1, 0, ring}};
    if (d == -1) {
        g.roots_of_unity.push_back({0, 1, ring});
        g.roots_of_unity.push_back({0, -1, ring});
    } else if (d == -3) {
        // w = (1+sqrt(-3))/2 is a primitive sixth root of unity; w^2 = w - 1.
        g.roots_of_unity.push_back({0, 1, ring});
        g.roots_of_unity.push_back({0, -1, ring});
        g.roots_of_unity.push_back({-1, 1, ring});
        g.roots_of_unity.push_back({1, -1, ring});
    }
    if (d > 0) g.fundamental = fundamental_unit(d);
    return g;
}

/// d < 0: the whole (finite) unit group. d > 0: {+-eps^k : |k| <= n_max},
/// ordered k = 0, 1, -1, 2, -2, ...
inline std::vector<OkElem> units(std::int64_t d, unsigned n_max) {
    const UnitGroupDesc g = unit_group(d);
    if (!g.fundamental) return g.roots_of_unity;
    const QuadElem eps = g.fundamental->to_quad();
    const QuadElem eps_inv = QuadElem::rational(1, d) / eps;
    std::vector<OkElem> out = {OkElem{1, 0, g.fundamental->ring}, OkElem{-1, 0, g.fundamental->ring}};
    for (unsigned k = 1; k <= n_max; ++k) {
        for (const QuadElem& e : {pow(eps, k), pow(eps_inv, k)}) {
            out.push_back(to_ok(e));
            out.push_back(to_ok(-e));
        }
    }
    return out;
}

}  // namespace quadfermat
