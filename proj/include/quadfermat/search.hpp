#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "quadfermat/curve.hpp"

namespace quadfermat {

enum class Scope { RationalOnly, OkOnly, FullK };

inline std::string to_string(Scope s) {
    switch (s) {
        case Scope::RationalOnly: return "rational";
        case Scope::OkOnly: return "ok";
        case Scope::FullK: return "full-k";
    }
    return "?";
}

inline Scope parse_scope(const std::string& s) {
    if (s == "rational") return Scope::RationalOnly;
    if (s == "ok") return Scope::OkOnly;
    if (s == "full-k") return Scope::FullK;
    throw ValidationError("unknown scope '" + s + "' (expected rational, ok or full-k)");
}

struct SearchBox {
    std::uint64_t height = 1;
    Scope scope = Scope::FullK;
    bool skip_trivial = false;
    // Collapse hits that differ by a common factor in K into one orbit.
    bool group_orbits = true;
};

/// Rationals n/m in lowest terms with |n| <= h, 1 <= m <= h, ascending.
inline std::vector<BigRational> box_rationals(std::uint64_t h) {
    std::set<BigRational> seen;
    for (std::int64_t m = 1; m <= std::int64_t(h); ++m)
        for (std::int64_t n = -std::int64_t(h); n <= std::int64_t(h); ++n) seen.insert(BigRational(n, m));
    return {seen.begin(), seen.end()};
}

/// Elements enumerated for one component, in lexicographic coordinate order:
///   rational  -- box_rationals(H)
///   ok        -- u + v*w with |u|, |v| <= H in the integral basis
///   full-k    -- a + b*sqrt(d) with a, b in box_rationals(H)
inline std::vector<QuadElem> box_elements(std::int64_t d, const SearchBox& box) {
    if (box.height < 1) throw ValidationError("search height must be >= 1");
    std::vector<QuadElem> out;
    const auto rs = box_rationals(box.height);
    switch (box.scope) {
        case Scope::RationalOnly:
            for (const auto& r : rs) out.push_back(QuadElem::rational(r, d));
            break;
        case Scope::OkOnly: {
            const RingDesc ring = make_ring(d);
            const auto h = std::int64_t(box.height);
            for (std::int64_t u = -h; u <= h; ++u)
                for (std::int64_t v = -h; v <= h; ++v) out.push_back(OkElem{u, v, ring}.to_quad());
            break;
        }
        case Scope::FullK:
            for (const auto& a : rs)
                for (const auto& b : rs) out.push_back(QuadElem(a, b, d));
            break;
    }
    return out;
}

enum class Verdict { Consistent, CounterexampleFound };

inline std::string to_string(Verdict v) {
    return v == Verdict::Consistent ? "CONSISTENT_WITH_PAPER" : "COUNTEREXAMPLE_FOUND";
}

struct SearchHit {
    SolutionTriple solution;
    std::array<std::size_t, 3> index;  // positions in box_elements
    std::uint64_t orbit_size = 1;
    std::optional<CurvePoint> point;   // present when x != 0
    std::optional<PointClassification> point_class;
};

struct SearchReport {
    EquationSpec equation;
    SearchBox box;
    std::vector<SearchHit> hits;
    std::uint64_t box_size = 0;     // elements per component
    std::uint64_t enumerated = 0;   // triples decided, box_size^3
    std::uint64_t raw_hits = 0;     // solutions before orbit grouping
    std::vector<std::string> findings;
    Verdict verdict = Verdict::Consistent;
    std::chrono::nanoseconds elapsed{0};
};

inline std::uint64_t default_threads() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

namespace detail {

// Orbit representative preference: lower height, then fewer irrational entries.
inline std::pair<BigInt, int> representative_rank(const SolutionTriple& s) {
    return {std::max({height(s.x), height(s.y), height(s.z)}),
            int(!s.x.is_rational()) + int(!s.y.is_rational()) + int(!s.z.is_rational())};
}

// Canonical representative of the K^* orbit: divide by the first nonzero entry.
inline std::string orbit_key(const SolutionTriple& s) {
    const QuadElem* lead = !s.x.is_zero() ? &s.x : !s.y.is_zero() ? &s.y : !s.z.is_zero() ? &s.z : nullptr;
    if (lead == nullptr) return "0|0|0";
    return to_string(s.x / *lead) + "|" + to_string(s.y / *lead) + "|" + to_string(s.z / *lead);
}

// Checks one classified hit against the statements about solutions in K.
inline void audit_hit(const EquationSpec& eq, const SearchHit& h, std::vector<std::string>& findings) {
    const auto& s = h.solution;
    const std::string where = "(" + to_string(s.x) + ", " + to_string(s.y) + ", " + to_string(s.z) + ")";
    if (s.cls == SolutionClass::Generic) findings.push_back("GENERIC solution " + where);
    if (!is_nontrivial(s.x, s.y, s.z)) return;
    if (s.cls != SolutionClass::Rational && !eq.bc_unit())
        findings.push_back("solution outside Q with BC != +-1: " + where);
    if (h.point_class) {
        const auto& pc = *h.point_class;
        if (pc.y_class == YClass::Mixed) findings.push_back("Y mixed (mn != 0) for " + where);
        if (!pc.coefficients_match) findings.push_back(to_string(pc.y_class) + " with incompatible coefficients for " + where);
        if (pc.x_rational != (pc.y_class != YClass::Mixed)) findings.push_back("X rationality mismatch for " + where);
    }
}

}  // namespace detail

/// Exhaustive solution search over box^3.
///
/// For each (x, y) the matching z are looked up in an index of C*z^p, which
/// decides every triple of the box exactly. The x-range is split into
/// `threads` contiguous slices; results are merged in (x, y, z) index order so
/// the report does not depend on the thread count.
inline SearchReport search(const EquationSpec& eq, const SearchBox& box, std::uint64_t threads = 1) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport rep{eq, box, {}, 0, 0, 0, {}, Verdict::Consistent, {}};
    const std::vector<QuadElem> elems = box_elements(eq.d, box);
    const std::size_t n = elems.size();
    rep.box_size = n;
    rep.enumerated = std::uint64_t(n) * n * n;

    const QuadElem A = lift(eq.A, eq.d), B = lift(eq.B, eq.d), C = lift(eq.C, eq.d);
    std::vector<QuadElem> ax, by;
    std::map<QuadElem, std::vector<std::size_t>> cz_index;
    ax.reserve(n);
    by.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const QuadElem pw = pow(elems[i], eq.p);
        ax.push_back(A * pw);
        by.push_back(B * pw);
        cz_index[C * pw].push_back(i);
    }

    threads = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, n));
    std::vector<std::vector<SearchHit>> partial(threads);
    auto worker = [&](std::size_t slice) {
        const std::size_t lo = n * slice / threads, hi = n * (slice + 1) / threads;
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                auto it = cz_index.find(-(ax[i] + by[j]));
                if (it == cz_index.end()) continue;
                for (std::size_t k : it->second) {
                    const QuadElem &x = elems[i], &y = elems[j], &z = elems[k];
                    if (box.skip_trivial && !is_nontrivial(x, y, z)) continue;
                    SearchHit h{classify_solution(eq, x, y, z), {i, j, k}, 1, std::nullopt, std::nullopt};
                    if (!x.is_zero()) {
                        h.point = forward_map(eq, x, y, z);
                        h.point_class = classify_point(eq, *h.point);
                    }
                    partial[slice].push_back(std::move(h));
                }
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    std::vector<SearchHit> all;
    for (auto& part : partial)
        for (auto& h : part) all.push_back(std::move(h));
    std::sort(all.begin(), all.end(), [](const SearchHit& a, const SearchHit& b) { return a.index < b.index; });
    rep.raw_hits = all.size();

    for (const auto& h : all) detail::audit_hit(eq, h, rep.findings);

    if (box.group_orbits) {
        std::map<std::string, std::size_t> slot;
        for (auto& h : all) {
            auto [it, fresh] = slot.emplace(detail::orbit_key(h.solution), rep.hits.size());
            if (fresh) {
                rep.hits.push_back(std::move(h));
                continue;
            }
            SearchHit& rep_hit = rep.hits[it->second];
            const std::uint64_t size = rep_hit.orbit_size + 1;
            if (detail::representative_rank(h.solution) < detail::representative_rank(rep_hit.solution)) rep_hit = std::move(h);
            rep_hit.orbit_size = size;
        }
        std::sort(rep.hits.begin(), rep.hits.end(),
                  [](const SearchHit& a, const SearchHit& b) { return a.index < b.index; });
    } else {
        rep.hits = std::move(all);
    }

    if (!rep.findings.empty()) rep.verdict = Verdict::CounterexampleFound;
    rep.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0);
    return rep;
}

/// Nontrivial hits whose triple is not a K-multiple of a rational triple.
inline std::size_t count_outside_q(const SearchReport& rep) {
    return std::size_t(std::count_if(rep.hits.begin(), rep.hits.end(), [](const SearchHit& h) {
        const auto& s = h.solution;
        return is_nontrivial(s.x, s.y, s.z) && !projectively_rational(s.x, s.y, s.z);
    }));
}

// ---------------------------------------------------------------------------
// Conjugate-unit families (BC = +-1)

struct FamilyMember {
    EquationSpec equation;
    SolutionTriple solution;
};

/// For z in O_K \ Z with basis coordinates bounded by `height` and each unit
/// w (exponents |k| <= unit_exponent when d > 0), sets y = w*conj(z) and
/// T = B y^p + C z^p. When T is a nonzero integer with -T p-th-powerfree the
/// pair (A = -T, solution (1, y, z)) is emitted after substitution.
inline std::vector<FamilyMember> gen_conjugate_family(const BigInt& b, const BigInt& c, std::uint64_t p,
                                                      std::int64_t d, std::uint64_t height,
                                                      unsigned unit_exponent = 2) {
    if (abs(b * c) != 1) throw ValidationError("gen_conjugate_family: needs BC = +-1");
    const RingDesc ring = make_ring(d);
    const std::vector<OkElem> us = units(d, unit_exponent);
    const QuadElem B = lift(b, d), C = lift(c, d), one = lift(1, d);
    std::vector<FamilyMember> out;
    const auto h = std::int64_t(height);
    for (std::int64_t zu = -h; zu <= h; ++zu) {
        for (std::int64_t zv = -h; zv <= h; ++zv) {
            if (zv == 0) continue;  // rational z
            const QuadElem z = OkElem{zu, zv, ring}.to_quad();
            const QuadElem zp = pow(z, p);
            for (const OkElem& w : us) {
                const QuadElem y = w.to_quad() * conj(z);
                const QuadElem t = B * pow(y, p) + C * zp;
                if (!t.is_rational() || !is_integral(t.re()) || t.re() == 0) continue;
                const BigInt a = -num(t.re());
                if (!is_pth_powerfree(a, p)) continue;
                const EquationSpec eq = make_equation(a, b, c, p, d);
                out.push_back({eq, classify_solution(eq, one, y, z)});
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Trivial solutions

struct TrivialLemmaReport {
    bool ok = true;
    std::vector<SolutionTriple> solutions;  // every solution with xyz = 0
    std::vector<std::string> findings;      // violations and symmetric-case notes
    std::uint64_t scanned = 0;
};

/// Scans every triple with xyz = 0 over the full-k box of the given height.
/// Each solution must be (0,0,0) or a unit-scaled (+-1, 1, 0) shape carried by
/// a coefficient pair with product +-1. Shapes carried by AC or BC are accepted
/// and reported as symmetric-case findings.
inline TrivialLemmaReport verify_trivial_lemma_report(const EquationSpec& eq, std::uint64_t height) {
    SearchBox box{height, Scope::FullK, false, false};
    const auto elems = box_elements(eq.d, box);
    const std::size_t n = elems.size();
    const auto zero_it = std::find_if(elems.begin(), elems.end(), [](const QuadElem& e) { return e.is_zero(); });
    const std::size_t zero = std::size_t(zero_it - elems.begin());
    std::set<std::array<std::size_t, 3>> seen;
    TrivialLemmaReport rep;
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            for (const auto& idx : {std::array<std::size_t, 3>{s, t, zero}, std::array<std::size_t, 3>{s, zero, t},
                                    std::array<std::size_t, 3>{zero, s, t}}) {
                if (!seen.insert(idx).second) continue;
                ++rep.scanned;
                const QuadElem &x = elems[idx[0]], &y = elems[idx[1]], &z = elems[idx[2]];
                if (!is_solution(eq, x, y, z)) continue;
                rep.solutions.push_back(classify_solution(eq, x, y, z));
                if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
                const auto shape = trivial_unit_shape(eq, x, y, z);
                const std::string where = "(" + to_string(x) + ", " + to_string(y) + ", " + to_string(z) + ")";
                if (!shape) {
                    rep.ok = false;
                    rep.findings.push_back("violation: " + where);
                } else if (*shape != "AB") {
                    rep.findings.push_back("symmetric " + *shape + "-unit shape: " + where);
                }
            }
        }
    }
    return rep;
}

inline bool verify_trivial_lemma(const EquationSpec& eq, std::uint64_t height) {
    return verify_trivial_lemma_report(eq, height).ok;
}

// ---------------------------------------------------------------------------
// mn = 0

/// Every sample must be a nontrivial solution (ContractViolation otherwise);
/// returns true iff Re(Y) * Im(Y) = 0 for all mapped points.
inline bool verify_mn_theorem(const std::vector<FamilyMember>& samples) {
    bool ok = true;
    for (const auto& [eq, s] : samples) {
        if (!is_nontrivial(s.x, s.y, s.z))
            throw ContractViolation("verify_mn_theorem: trivial sample for " + equation_string(eq));
        const CurvePoint pt = forward_map(eq, s.x, s.y, s.z);
        if (pt.Y.re() * pt.Y.im() != 0) ok = false;
    }
    return ok;
}

}  // namespace quadfermat
