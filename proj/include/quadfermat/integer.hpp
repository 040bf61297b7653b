#pragma once

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "quadfermat/bigrational.hpp"

namespace quadfermat {

/// Signed prime factorization. `factors` is sorted by prime, exponents >= 1,
/// and sign * prod(prime^exponent) reconstructs the original integer.
struct FactoredInt {
    int sign = 1;
    std::vector<std::pair<BigInt, unsigned>> factors;

    BigInt value() const {
        BigInt v = sign;
        for (const auto& [prime, exp] : factors) v *= ipow(prime, exp);
        return v;
    }
    friend bool operator==(const FactoredInt&, const FactoredInt&) = default;
};

namespace detail {

inline constexpr unsigned kTrialDivisionBound = 10000;

inline bool probably_prime(const BigInt& n) {
    if (n < 2) return false;
    // Fixed seed: primality answers must not depend on run.
    std::mt19937 gen(0x5eed);
    return boost::multiprecision::miller_rabin_test(n, 25, gen);
}

inline BigInt pollard_brent(const BigInt& n, unsigned seed) {
    if (n % 2 == 0) return 2;
    std::mt19937_64 gen(seed);
    auto draw = [&] { return BigInt(gen()) % (n - 1) + 1; };
    BigInt y = draw(), c = draw(), g = 1, q = 1, x, ys;
    const unsigned m = 128;
    std::uint64_t r = 1;
    auto step = [&](const BigInt& v) { return (v * v + c) % n; };
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = step(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (std::uint64_t i = 0; i < std::min<std::uint64_t>(m, r - k); ++i) {
                y = step(y);
                q = q * abs(BigInt(x - y)) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = step(ys);
            g = gcd(BigInt(x - ys), n);
        } while (g == 1);
    }
    return g;
}

inline void split_into(const BigInt& n, std::vector<BigInt>& primes) {
    if (n == 1) return;
    if (probably_prime(n)) {
        primes.push_back(n);
        return;
    }
    BigInt d = n;
    for (unsigned seed = 1; d == n; ++seed) d = pollard_brent(n, seed);
    split_into(d, primes);
    split_into(n / d, primes);
}

}  // namespace detail

inline bool is_prime(const BigInt& n) { return detail::probably_prime(n); }

/// Complete factorization: trial division by small primes, then
/// Pollard-Brent rho on the cofactor. Throws DomainError for n == 0.
inline FactoredInt factor(const BigInt& n) {
    if (n == 0) throw DomainError("factor: zero has no factorization");
    FactoredInt out;
    out.sign = n < 0 ? -1 : 1;
    BigInt rest = abs(n);
    for (unsigned p = 2; p < detail::kTrialDivisionBound && BigInt(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e != 0) out.factors.emplace_back(BigInt(p), e);
    }
    if (rest != 1) {
        std::vector<BigInt> primes;
        detail::split_into(rest, primes);
        std::sort(primes.begin(), primes.end());
        for (const auto& q : primes) {
            if (!out.factors.empty() && out.factors.back().first == q)
                ++out.factors.back().second;
            else
                out.factors.emplace_back(q, 1u);
        }
    }
    return out;
}

inline bool is_squarefree(const BigInt& n) {
    if (n == 0) throw DomainError("is_squarefree: zero input");
    const auto f = factor(n);
    return std::all_of(f.factors.begin(), f.factors.end(), [](const auto& pe) { return pe.second < 2; });
}

inline bool is_pth_powerfree(const BigInt& n, std::uint64_t p) {
    if (n == 0) throw DomainError("is_pth_powerfree: zero input");
    if (!is_prime(BigInt(p))) throw DomainError("is_pth_powerfree: exponent " + std::to_string(p) + " is not prime");
    const auto f = factor(n);
    return std::all_of(f.factors.begin(), f.factors.end(), [p](const auto& pe) { return pe.second < p; });
}

/// floor(n^(1/k)) for n >= 0, k >= 1.
inline BigInt integer_root(const BigInt& n, std::uint64_t k) {
    if (n < 0) throw DomainError("integer_root: negative radicand");
    if (k == 0) throw DomainError("integer_root: zeroth root");
    if (n < 2 || k == 1) return n;
    // Newton from above: start at 2^ceil(bits/k).
    const std::size_t bits = boost::multiprecision::msb(n) + 1;
    BigInt x = BigInt(1) << ((bits + k - 1) / k);
    while (true) {
        BigInt y = ((k - 1) * x + n / ipow(x, k - 1)) / k;
        if (y >= x) break;
        x = y;
    }
    while (ipow(x, k) > n) --x;
    while (ipow(x + 1, k) <= n) ++x;
    return x;
}

inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline std::optional<BigInt> exact_root(const BigInt& n, std::uint64_t k) {
    if (n < 0) {
        if (k % 2 == 0) return std::nullopt;
        auto r = exact_root(BigInt(-n), k);
        if (!r) return std::nullopt;
        return BigInt(-*r);
    }
    BigInt r = integer_root(n, k);
    if (ipow(r, k) != n) return std::nullopt;
    return r;
}

/// The unique rational r with r^p == q, when it exists.
inline std::optional<BigRational> rational_pth_root(const BigRational& q, std::uint64_t p) {
    if (p % 2 == 0 || !is_prime(BigInt(p))) throw DomainError("rational_pth_root: exponent must be an odd prime");
    auto n = exact_root(num(q), p);
    if (!n) return std::nullopt;
    auto d = exact_root(den(q), p);
    if (!d) return std::nullopt;
    return BigRational(*n, *d);
}

}  // namespace quadfermat
