// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace quadfermat;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& what) {
    if (cond) return;
    if (o.pass) o.detail = what;
    o.pass = false;
}

std::vector<std::int64_t> squarefree_range(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = lo; d <= hi; ++d)
        if (d != 0 && d != 1 && oracle::squarefree_by_scan(d)) out.push_back(d);
    return out;
}

BigInt to_big(oracle::i128 v) {
    const bool neg = v < 0;
    unsigned __int128 m = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    BigInt out = 0, place = 1;
    while (m) {
        out += place * static_cast<unsigned>(m % 10);
        place *= 10;
        m /= 10;
    }
    return neg ? BigInt(-out) : out;
}

// 1. Vanishing decisions against exact expansion on the full integer grid.
Outcome vanishing_conditions() {
    Outcome o;
    std::size_t cases = 0, vanishing = 0;
    for (std::int64_t d : squarefree_range(-50, 50)) {
        for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
            for (int a = -20; a <= 20; ++a) {
                for (int b = -20; b <= 20; ++b) {
                    const PowerParts pp = power_parts(a, b, d, p);
                    const auto [re, im] = oracle::int_power(a, b, d, unsigned(p));
                    expect(o, pp.re_part == to_big(re) && pp.im_part == to_big(im),
                           "expansion mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b));
                    const bool re0 = vanish_decide(Component::Re, a, b, d, p).vanishes;
                    const bool im0 = vanish_decide(Component::Im, a, b, d, p).vanishes;
                    expect(o, re0 == (pp.re_part == 0) && im0 == (pp.im_part == 0),
                           "decision mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                               " d=" + std::to_string(d) + " p=" + std::to_string(p));
                    vanishing += re0 + im0;
                    ++cases;
                }
            }
        }
    }
    o.detail = std::to_string(cases) + " (a,b,d,p) cases, " + std::to_string(vanishing) + " vanishing components" +
               (o.pass ? "" : "; first failure: " + o.detail);
    return o;
}

// 2. Forward-map identity with A, B random and C solved in K.
Outcome forward_identity() {
    Outcome o;
    std::mt19937_64 rng(20240229);
    std::uniform_int_distribution<int> n(-10, 10), m(1, 10);
    const auto ds = squarefree_range(-30, 30);
    const std::uint64_t ps[] = {5, 7, 11, 13};
    auto elem = [&](std::int64_t d) { return QuadElem(BigRational(n(rng), m(rng)), BigRational(n(rng), m(rng)), d); };
    int done = 0;
    while (done < 1000) {
        const std::int64_t d = ds[rng() % ds.size()];
        const std::uint64_t p = ps[rng() % 4];
        const QuadElem x = elem(d), y = elem(d), z = elem(d);
        if (x.is_zero() || z.is_zero()) continue;
        const QuadElem a = QuadElem::rational(BigRational(n(rng), m(rng)), d);
        const QuadElem b = QuadElem::rational(BigRational(n(rng), m(rng)), d);
        if (a.is_zero() || b.is_zero()) continue;
        const QuadElem c = -(a * pow(x, p) + b * pow(y, p)) / pow(z, p);
        expect(o, (a * pow(x, p) + b * pow(y, p) + c * pow(z, p)).is_zero(), "C not solved");
        const CurvePoint pt = forward_map_raw(b, c, p, x, y, z);
        expect(o, pt.Y * pt.Y - pow(pt.X, p) == a * a * pow(b * c, p - 1) / QuadElem::rational(4, d),
               "identity fails for x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z));
        ++done;
    }
    o.detail = std::to_string(done) + " random instances" + (o.pass ? "" : "; " + o.detail);
    return o;
}

// 3. Worked conjugate-unit example.
Outcome worked_example() {
    Outcome o;
    const auto [re5, im5] = oracle::int_power(1, 1, 2, 5);
    expect(o, re5 == 41 && im5 == 29, "(1+sqrt2)^5 != 41+29 sqrt2");
    const auto eq = make_equation(-82, 1, 1, 5, 2);
    expect(o, eq.alpha == 1681, "alpha != 1681");
    const QuadElem x = parse_quad("1", 2), y = parse_quad("1 - sqrt(2)"), z = parse_quad("1 + sqrt(2)");
    expect(o, is_solution(eq, x, y, z), "not a solution");
    const auto pt = forward_map(eq, x, y, z);
    expect(o, pt.X == parse_quad("1", 2) && pt.Y == parse_quad("-29*sqrt(2)"), "point != (1, -29 sqrt2)");
    expect(o, pt.Y * pt.Y == QuadElem::rational(1682, 2), "Y^2 != 1682");
    expect(o, pow(pt.X, 5) + QuadElem::rational(eq.alpha, 2) == QuadElem::rational(1682, 2), "X^5 + alpha != 1682");
    const auto pc = classify_point(eq, pt);
    expect(o, pc.y_class == YClass::PureIrrational, "class != Y_PURE_IRRATIONAL");
    expect(o, eq.B * eq.C == 1 && y == conj(z), "BC != 1 or y != conj(z)");
    const auto s = classify_solution(eq, x, y, z);
    expect(o, s.cls == SolutionClass::ConjugateUnit && s.unit && *s.unit == QuadElem::rational(1, 2),
           "solution not CONJUGATE_UNIT with u=1");
    o.detail = "X = " + to_string(pt.X) + ", Y = " + to_string(pt.Y) + ", " + to_string(pc.y_class) +
               (o.pass ? "" : "; " + o.detail);
    return o;
}

// 4. Y = 0 forces A = +-2 and BC = +-1.
Outcome y_zero() {
    Outcome o;
    const std::int64_t ds[] = {-3, -1, 2, 5};
    for (std::int64_t d : ds) {
        const auto eq = make_equation(2, 1, 1, 5, d);
        const auto pt = forward_map(eq, lift(-1, d), lift(1, d), lift(1, d));
        expect(o, pt.X == lift(-1, d) && pt.Y.is_zero(), "(-1,1,1) does not map to (-1, 0) for d=" + std::to_string(d));
    }
    const std::vector<std::array<int, 3>> coeffs = {{2, 1, 1}, {-2, 1, 1}, {2, -1, 1}, {1, 1, 1}, {3, 1, 1},
                                                    {1, 2, 3}, {2, 3, 5}, {2, 1, 3}, {1, -1, 2}};
    std::size_t searches = 0, zero_hits = 0;
    for (std::int64_t d : ds) {
        for (const auto& [a, b, c] : coeffs) {
            const auto eq = make_equation(a, b, c, 5, d);
            for (Scope sc : {Scope::RationalOnly, Scope::OkOnly, Scope::FullK}) {
                for (std::uint64_t h = 1; h <= 3; ++h) {
                    SearchBox box{h, sc, false, false};
                    const auto rep = search(eq, box);
                    ++searches;
                    for (const auto& hit : rep.hits) {
                        if (!hit.point || !hit.point->Y.is_zero()) continue;
                        ++zero_hits;
                        expect(o, abs(eq.A) == 2 && eq.bc_unit(), "Y=0 hit on " + equation_string(eq));
                    }
                }
            }
        }
    }
    expect(o, zero_hits > 0, "no Y=0 hits found at all");
    o.detail = std::to_string(searches) + " searches, " + std::to_string(zero_hits) + " Y=0 hits" +
               (o.pass ? "" : "; " + o.detail);
    return o;
}

// 5 and 6 share the BC != +-1 searches.
std::vector<std::pair<EquationSpec, SearchHit>> rational_hits;

Outcome no_solutions_outside_q() {
    Outcome o;
    const std::vector<std::array<int, 3>> coeffs = {{1, 2, 3}, {1, 2, 5}, {3, 5, 7}, {2, 3, 5}};
    std::size_t searches = 0, total_hits = 0;
    for (const auto& [a, b, c] : coeffs) {
        for (std::uint64_t p : {5u, 7u}) {
            for (std::int64_t d : {-1, 2, 5}) {
                const auto eq = make_equation(a, b, c, p, d);
                const auto rep = search(eq, SearchBox{2, Scope::FullK, false, false}, default_threads());
                ++searches;
                total_hits += rep.hits.size();
                expect(o, count_outside_q(rep) == 0, "solution outside Q for " + equation_string(eq));
                expect(o, rep.verdict == Verdict::Consistent, "verdict " + to_string(rep.verdict) + " for " +
                                                                           equation_string(eq));
                for (const auto& h : rep.hits)
                    if (is_nontrivial(h.solution.x, h.solution.y, h.solution.z)) rational_hits.emplace_back(eq, h);
            }
        }
    }
    o.detail = std::to_string(searches) + " full-k searches at height 2, " + std::to_string(total_hits) +
               " hits, 0 outside Q" + (o.pass ? "" : "; " + o.detail);
    return o;
}

Outcome mn_zero() {
    Outcome o;
    std::size_t family = 0;
    for (std::int64_t d : {-1, 2, 5}) {
        for (std::uint64_t p : {5u, 7u}) {
            for (const auto& [b, c] : std::vector<std::pair<int, int>>{{1, 1}, {1, -1}}) {
                const auto fam = gen_conjugate_family(b, c, p, d, 3);
                family += fam.size();
                expect(o, verify_mn_theorem(fam), "mn != 0 in family d=" + std::to_string(d));
                for (const auto& [eq, s] : fam) {
                    expect(o, is_solution(eq, s.x, s.y, s.z), "family member is not a solution");
                    expect(o, mn_identities_hold(eq, s.x, s.y, s.z), "m, n identities fail for " + equation_string(eq));
                }
            }
        }
    }
    expect(o, family > 0, "empty families");
    std::size_t rational = 0;
    for (const auto& [eq, h] : rational_hits) {
        ++rational;
        const auto pt = forward_map(eq, h.solution.x, h.solution.y, h.solution.z);
        expect(o, pt.Y.re() * pt.Y.im() == 0, "mn != 0 on a rational hit of " + equation_string(eq));
    }
    expect(o, rational > 0, "no rational hits carried over");
    o.detail = std::to_string(family) + " family solutions, " + std::to_string(rational) + " rational hits" +
               (o.pass ? "" : "; " + o.detail);
    return o;
}

// 7. Units against a Pell scan, and torsion counts.
Outcome unit_checks() {
    Outcome o;
    std::size_t fields = 0;
    for (std::int64_t d = 2; d <= 100; ++d) {
        if (!oracle::squarefree_by_scan(d)) continue;
        ++fields;
        const OkElem e = fundamental_unit(d);
        expect(o, abs(norm(e)) == 1, "norm not +-1 for d=" + std::to_string(d));
        const auto ref = oracle::pell_scan_unit(d, 10'000'000);
        expect(o, ref && e.to_quad().re() == ref->first && e.to_quad().im() == ref->second,
               "unit mismatch for d=" + std::to_string(d));
    }
    std::size_t neg = 0;
    for (std::int64_t d = -100; d <= -1; ++d) {
        if (!oracle::squarefree_by_scan(d)) continue;
        ++neg;
        const std::size_t want = d == -1 ? 4 : d == -3 ? 6 : 2;
        const auto us = units(d, 0);
        expect(o, us.size() == want, "root-of-unity count for d=" + std::to_string(d));
        for (const auto& u : us) expect(o, norm(u) == 1, "torsion unit of norm != 1");
    }
    o.detail = std::to_string(fields) + " real fields, " + std::to_string(neg) + " imaginary fields" +
               (o.pass ? "" : "; " + o.detail);
    return o;
}

// 8. Coprimality relations.
Outcome coprimality() {
    Outcome o;
    std::mt19937_64 rng(8080);
    std::uniform_int_distribution<int> c(-25, 25);
    std::size_t pairs = 0, norm_yes = 0, ideal_yes = 0;
    for (std::int64_t d : {-5, -3, -1, 2, 5, 10}) {
        const RingDesc ring = make_ring(d);
        int done = 0;
        while (done < 500) {
            const OkElem x{c(rng), c(rng), ring}, y{c(rng), c(rng), ring};
            if (x.is_zero() || y.is_zero()) continue;
            ++done;
            ++pairs;
            const bool nc = norm_coprime(x, y), ic = ideal_coprime(x, y);
            norm_yes += nc;
            ideal_yes += ic;
            expect(o, !nc || ic, "norm-coprime but not ideal-coprime: " + to_string(x) + ", " + to_string(y));
            expect(o, ideal_coprime(conj(x), conj(y)) == ic, "conjugation changes coprimality");
            const QuadElem w = omega(ring);
            std::vector<std::pair<BigInt, BigInt>> gens;
            for (const OkElem& g : {x, y})
                for (const QuadElem& e : {g.to_quad(), g.to_quad() * w}) {
                    const OkElem t = to_ok(e);
                    gens.emplace_back(t.u, t.v);
                }
            expect(o, ideal_hnf(x, y).index() == oracle::lattice_index_by_minors(gens), "HNF index != minors gcd");
        }
    }
    const OkElem a = to_ok(parse_quad("1 + sqrt(-1)")), b = to_ok(parse_quad("1 - sqrt(-1)"));
    expect(o, gcd(norm(a), norm(b)) == 2, "gcd of norms of 1+-i != 2");
    expect(o, !norm_coprime(a, b), "1+-i reported norm-coprime");
    expect(o, !ideal_coprime(a, b), "1+-i reported ideal-coprime");
    o.detail = std::to_string(pairs) + " pairs (" + std::to_string(norm_yes) + " norm-coprime, " +
               std::to_string(ideal_yes) + " ideal-coprime); 1+-i: norm gcd 2, not coprime" +
               (o.pass ? "" : "; " + o.detail);
    return o;
}

// 9. Reports independent of worker count.
Outcome determinism() {
    Outcome o;
    struct Job {
        EquationSpec eq;
        SearchBox box;
    };
    const std::vector<Job> jobs = {
        {make_equation(-82, 1, 1, 5, 2), {3, Scope::OkOnly, false, true}},
        {make_equation(2, 1, 1, 5, -1), {2, Scope::FullK, false, false}},
        {make_equation(1, 2, 3, 7, 5), {2, Scope::FullK, false, true}},
        {make_equation(8, 1, 1, 5, -1), {3, Scope::OkOnly, true, true}},
    };
    for (const auto& j : jobs) {
        const std::string one = records::report_records(search(j.eq, j.box, 1));
        const std::string csv = records::report_csv(search(j.eq, j.box, 1));
        for (std::uint64_t t : {2u, 8u}) {
            const auto rep = search(j.eq, j.box, t);
            expect(o, records::report_records(rep) == one && records::report_csv(rep) == csv,
                   "output differs at " + std::to_string(t) + " workers for " + equation_string(j.eq));
        }
    }
    o.detail = std::to_string(jobs.size()) + " searches at 1, 2, 8 workers" + (o.pass ? "" : "; " + o.detail);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"vanishing conditions match expansion", vanishing_conditions},
        {"forward-map identity", forward_identity},
        {"worked conjugate-unit example", worked_example},
        {"Y = 0 forces A = +-2, BC = +-1", y_zero},
        {"no solutions outside Q for BC != +-1", no_solutions_outside_q},
        {"mn = 0 on families and rational hits", mn_zero},
        {"fundamental units and roots of unity", unit_checks},
        {"coprimality relations", coprimality},
        {"determinism across worker counts", determinism},
    };
    bool all = true;
    int k = 0;
    for (const auto& [name, fn] : criteria) {
        ++k;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && r.pass;
        std::printf("%s criterion %d: %s -- %s [%.1fs]\n", r.pass ? "PASS" : "FAIL", k, name, r.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
