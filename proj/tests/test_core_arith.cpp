#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace quadfermat;

namespace {

QuadElem q(const char* s, std::int64_t d) { return parse_quad(s, d); }

QuadElem random_elem(std::mt19937_64& rng, std::int64_t d, int h = 9) {
    std::uniform_int_distribution<int> n(-h, h), m(1, h);
    return QuadElem(BigRational(n(rng), m(rng)), BigRational(n(rng), m(rng)), d);
}

}  // namespace

TEST_CASE("field arithmetic examples", "[core]") {
    CHECK(q("1 + sqrt(2)", 2) * q("1 - sqrt(2)", 2) == q("-1", 2));
    CHECK(pow(q("1 + sqrt(-1)", -1), 2) == q("2*sqrt(-1)", -1));
    const QuadElem e = q("3/4 - 5/7*sqrt(13)", 13);
    CHECK(e + QuadElem::rational(0, 13) == e);
    CHECK((e / e) == QuadElem::rational(1, 13));
    CHECK(e - e == QuadElem::rational(0, 13));
}

TEST_CASE("field errors", "[core]") {
    CHECK_THROWS_AS(q("1", 2) + q("1", 3), StructuralError);
    CHECK_THROWS_AS(q("1", 2) / q("0", 2), ArithmeticError);
    CHECK_THROWS_AS(QuadElem(1, 1, 12), DomainError);
    CHECK_THROWS_AS(QuadElem(1, 1, 1), DomainError);
    CHECK_THROWS_AS(QuadElem(1, 1, 0), DomainError);
}

TEST_CASE("conjugate and norm", "[core]") {
    CHECK(conj(q("3 + 4*sqrt(5)", 5)) == q("3 - 4*sqrt(5)", 5));
    CHECK(conj(q("7", 2)) == q("7", 2));
    CHECK(norm(q("1 + sqrt(2)", 2)) == -1);
    CHECK(norm(q("1 + sqrt(-1)", -1)) == 2);
    CHECK(norm(q("-82", 2)) == 6724);
}

TEST_CASE("powers", "[core]") {
    CHECK(pow(q("1 + sqrt(-3)", -3), 3) == q("-8", -3));
    CHECK(pow(q("3 + sqrt(-3)", -3), 3) == q("24*sqrt(-3)", -3));
    CHECK(pow(q("1 + sqrt(2)", 2), 5) == q("41 + 29*sqrt(2)", 2));
    CHECK(pow(q("5/3 - sqrt(7)", 7), 0) == q("1", 7));
}

TEST_CASE("field identities on random samples", "[core][property]") {
    std::mt19937_64 rng(20261015);
    for (std::int64_t d : {-7, -3, -1, 2, 5, 13}) {
        for (int i = 0; i < 200; ++i) {
            const QuadElem a = random_elem(rng, d), b = random_elem(rng, d);
            const QuadElem aa = a * conj(a);
            CHECK(aa.im() == 0);
            CHECK(aa.re() == norm(a));
            CHECK(norm(a * b) == norm(a) * norm(b));
            CHECK(conj(conj(a)) == a);
            QuadElem acc = QuadElem::rational(1, d);
            for (unsigned k = 0; k <= 12; ++k) {
                CHECK(pow(a, k) == acc);
                acc = acc * a;
            }
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("rendering and parsing", "[core]") {
    CHECK(to_string(q("0", 2)) == "0");
    CHECK(to_string(q("-29*sqrt(2)", 2)) == "-29*sqrt(2)");
    CHECK(to_string(q("1/2 + 1/2*sqrt(5)", 5)) == "1/2 + 1/2*sqrt(5)");
    CHECK(to_string(q("1 - sqrt(2)", 2)) == "1 - 1*sqrt(2)");
    CHECK(to_string(q("-3/4", -1)) == "-3/4");
    CHECK(parse_quad("(1+sqrt(5))/2") == QuadElem(BigRational(1, 2), BigRational(1, 2), 5));
    CHECK(parse_quad(" 2 / 4 *sqrt( -7 ) ") == QuadElem(0, BigRational(1, 2), -7));
    CHECK(parse_quad("sqrt(3)*sqrt(3)") == QuadElem::rational(3, 3));
    CHECK_THROWS_AS(parse_quad("1 + sqrt(3)", 2), DomainError);
    CHECK_THROWS_AS(parse_quad("1 +", 2), DomainError);
    CHECK_THROWS_AS(parse_quad("12"), DomainError);

    std::mt19937_64 rng(7);
    for (std::int64_t d : {-5, -1, 2, 17}) {
        for (int i = 0; i < 100; ++i) {
            const QuadElem e = random_elem(rng, d, 50);
            CHECK(parse_quad(to_string(e), d) == e);
        }
    }
}

TEST_CASE("squarefree and powerfree", "[core]") {
    CHECK(is_squarefree(-3));
    CHECK_FALSE(is_squarefree(12));
    CHECK(is_squarefree(-1));
    CHECK(is_squarefree(1));
    CHECK_THROWS_AS(is_squarefree(0), DomainError);
    for (std::int64_t n = -500; n <= 500; ++n)
        if (n != 0) CHECK(is_squarefree(n) == oracle::squarefree_by_scan(n));

    CHECK_FALSE(is_pth_powerfree(32, 5));
    CHECK(is_pth_powerfree(16, 5));
    CHECK(is_pth_powerfree(-82, 5));
    CHECK_THROWS_AS(is_pth_powerfree(0, 5), DomainError);
    CHECK_THROWS_AS(is_pth_powerfree(7, 4), DomainError);
}

TEST_CASE("powerfree agrees with factorization exponents", "[core][property]") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> dist(-5'000'000, 5'000'000);
    for (int i = 0; i < 300; ++i) {
        const std::int64_t n = dist(rng);
        if (n == 0) continue;
        const auto f = factor(n);
        for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
            bool direct = true;
            for (const auto& [prime, e] : f.factors) direct = direct && e < p;
            CHECK(is_pth_powerfree(n, p) == direct);
        }
    }
}

TEST_CASE("factorization", "[core]") {
    const auto f = factor(6724);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<BigInt, unsigned>{2, 2});
    CHECK(f.factors[1] == std::pair<BigInt, unsigned>{41, 2});
    CHECK(f.sign == 1);

    const auto m = factor(-1);
    CHECK(m.sign == -1);
    CHECK(m.factors.empty());

    CHECK(factor(97).factors == std::vector<std::pair<BigInt, unsigned>>{{97, 1}});
    CHECK_THROWS_AS(factor(0), DomainError);

    // Cofactor beyond the trial-division bound: two 10-digit primes.
    const BigInt p1("4294967291"), p2("2147483647");
    const auto big = factor(-p1 * p1 * p2);
    CHECK(big.sign == -1);
    CHECK(big.factors == std::vector<std::pair<BigInt, unsigned>>{{p2, 1}, {p1, 2}});

    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const BigInt n = BigInt(rng() >> 20) - BigInt(1) * (rng() >> 21);
        if (n == 0) continue;
        const auto g = factor(n);
        CHECK(g.value() == n);
        for (std::size_t k = 0; k < g.factors.size(); ++k) {
            CHECK(is_prime(g.factors[k].first));
            if (k > 0) CHECK(g.factors[k - 1].first < g.factors[k].first);
        }
    }
}

TEST_CASE("rational p-th roots", "[core]") {
    CHECK(rational_pth_root(BigRational(32, 243), 5) == BigRational(2, 3));
    CHECK_FALSE(rational_pth_root(BigRational(2), 5).has_value());
    CHECK(rational_pth_root(BigRational(-1), 7) == BigRational(-1));
    CHECK(rational_pth_root(BigRational(0), 3) == BigRational(0));
    CHECK_THROWS_AS(rational_pth_root(BigRational(4), 2), DomainError);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> n(-40, 40), m(1, 40);
    for (int i = 0; i < 300; ++i) {
        const BigRational base(n(rng), m(rng));
        for (std::uint64_t p : {3u, 5u, 7u}) {
            const BigRational target = rpow(base, p);
            CHECK(rational_pth_root(target, p) == base);
            // Perturbed values: when a root comes back it must be exact, and it
            // can only come back when both parts are perfect powers.
            const BigRational off = target + BigRational(1, m(rng));
            const auto r = rational_pth_root(off, p);
            auto perfect = [p](const BigInt& v) {
                if (v == 0) return true;
                const auto f = factor(v);
                for (const auto& pe : f.factors)
                    if (pe.second % p != 0) return false;
                return true;
            };
            const bool parts_are_powers = perfect(num(off)) && perfect(den(off));
            CHECK(r.has_value() == parts_are_powers);
            if (r) CHECK(rpow(*r, p) == off);
        }
    }
}
