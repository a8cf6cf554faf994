#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotlab/derivation.hpp"
#include "rotlab/free_poly.hpp"
#include "rotlab/text_io.hpp"

#include <random>

using namespace rotlab;

namespace {

AlphabetPtr uv2() {
    static AlphabetPtr a = share(Alphabet::uv(2));
    return a;
}

// small random polynomials: up to 3 terms, degree <= 4, coefficients in [-3,3]
FreePoly random_poly(std::mt19937_64& rng, const AlphabetPtr& alph, int max_deg = 4) {
    std::uniform_int_distribution<int> nterms(0, 3), deg(0, max_deg), coef(-3, 3),
        den(1, 3), pick(0, int(alph->size()) - 1);
    std::vector<FreePoly::Term> ts;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<Gen> ls;
        int d = deg(rng);
        for (int i = 0; i < d; ++i) ls.push_back(alph->generators()[size_t(pick(rng))]);
        int c = coef(rng);
        if (c == 0) c = 1;
        ts.emplace_back(Word(std::move(ls)), Rational(c, (unsigned long)den(rng)));
    }
    return FreePoly::from_terms(alph, std::move(ts));
}

} // namespace

TEST_CASE("multiplication basics") {
    auto A = uv2();
    FreePoly one = FreePoly::one(A);
    FreePoly u1 = FreePoly::gen(A, u(1)), u2 = FreePoly::gen(A, u(2));

    CHECK(poly_mul(one, u1 + u2) == u1 + u2);

    FreePoly sq = poly_mul(u1 + u2, u1 + u2);
    CHECK(sq == parse_free_poly("u1.u1 + u1.u2 + u2.u1 + u2.u2", A));

    CHECK(poly_mul(one + u2, one + u1) == parse_free_poly("1 + u1 + u2 + u2.u1", A));
}

TEST_CASE("alphabet mixing is an error") {
    auto A = uv2();
    auto B = share(Alphabet::u_only(3));
    FreePoly p = FreePoly::gen(A, u(1));
    FreePoly q = FreePoly::gen(B, u(1));
    CHECK_THROWS_AS(poly_mul(p, q), std::invalid_argument);
    CHECK_THROWS(FreePoly::gen(B, v(1)));
}

TEST_CASE("commutator definition and identities") {
    auto A = uv2();
    FreePoly u1 = FreePoly::gen(A, u(1)), u2 = FreePoly::gen(A, u(2)),
             v1 = FreePoly::gen(A, v(1));

    CHECK(commutator(u1, u1).is_zero());
    CHECK(commutator(u1, v1) == parse_free_poly("u1.v1 - v1.u1", A));
    // Leibniz: [u1 u2, v1] = u1 [u2, v1] + [u1, v1] u2
    CHECK(commutator(u1 * u2, v1) == u1 * commutator(u2, v1) + commutator(u1, v1) * u2);
}

TEST_CASE("derivations: unit, Leibniz, missing image") {
    auto A = uv2();
    FreePoly u1 = FreePoly::gen(A, u(1)), v1 = FreePoly::gen(A, v(1));
    Derivation d{A, {}};
    d.images.emplace(u(1), v1);
    d.images.emplace(u(2), FreePoly::zero(A));
    d.images.emplace(v(1), FreePoly::zero(A));
    d.images.emplace(v(2), FreePoly::zero(A));

    CHECK(derive(d, FreePoly::one(A)).is_zero());
    CHECK(derive(d, u1 * u1) == v1 * u1 + u1 * v1);

    Derivation partial{A, {}};
    partial.images.emplace(u(1), v1);
    CHECK_THROWS_WITH_AS(derive(partial, FreePoly::gen(A, u(2)) * u1),
                         doctest::Contains("u2"), std::invalid_argument);
}

TEST_CASE("inner derivations agree with the commutator") {
    auto A = uv2();
    FreePoly u1 = FreePoly::gen(A, u(1)), u2 = FreePoly::gen(A, u(2)),
             v1 = FreePoly::gen(A, v(1));

    Derivation zero_d = make_inner_derivation(FreePoly::zero(A));
    for (auto& [x, img] : zero_d.images) CHECK(img.is_zero());

    Derivation ad_v1 = make_inner_derivation(v1);
    CHECK(ad_v1.images.at(u(1)) == parse_free_poly("v1.u1 - u1.v1", A));
    CHECK(derive(ad_v1, u2 * u1) == commutator(v1, u2 * u1));
}

TEST_CASE("ring axioms hold exactly on random triples") {
    auto A = uv2();
    std::mt19937_64 rng(20160816);
    FreePoly one = FreePoly::one(A);
    for (int trial = 0; trial < 10000; ++trial) {
        FreePoly a = random_poly(rng, A), b = random_poly(rng, A), c = random_poly(rng, A);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * one == a);
        CHECK(one * a == a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("commutator Jacobi and Leibniz on random inputs") {
    auto A = uv2();
    std::mt19937_64 rng(271828);
    for (int trial = 0; trial < 10000; ++trial) {
        FreePoly a = random_poly(rng, A, 3), b = random_poly(rng, A, 3),
                 c = random_poly(rng, A, 3);
        FreePoly jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                          commutator(c, commutator(a, b));
        CHECK(jacobi.is_zero());
        CHECK(commutator(a * b, c) == a * commutator(b, c) + commutator(a, c) * b);
    }
}

TEST_CASE("derive satisfies the Leibniz law on random inputs") {
    auto A = uv2();
    std::mt19937_64 rng(314159);
    Derivation d{A, {}};
    for (Gen x : A->generators()) d.images.emplace(x, random_poly(rng, A, 2));
    for (int trial = 0; trial < 10000; ++trial) {
        FreePoly a = random_poly(rng, A, 3), b = random_poly(rng, A, 3);
        CHECK(derive(d, a * b) == derive(d, a) * b + a * derive(d, b));
    }
}

TEST_CASE("inner derivation equals z -> [a, z] on random inputs") {
    auto A = uv2();
    std::mt19937_64 rng(161803);
    for (int trial = 0; trial < 10000; ++trial) {
        FreePoly a = random_poly(rng, A), p = random_poly(rng, A);
        CHECK(derive(make_inner_derivation(a), p) == commutator(a, p));
    }
}

TEST_CASE("degree is additive for nonzero products") {
    auto A = uv2();
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        FreePoly a = random_poly(rng, A), b = random_poly(rng, A);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(poly_mul(a, b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("canonical text form round-trips") {
    auto A = uv2();
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        FreePoly p = random_poly(rng, A);
        CHECK(parse_free_poly(p.str(), A) == p);
    }
    CHECK(parse_free_poly("0", A).is_zero());
    CHECK(parse_free_poly("- 1 + 2 * u1.v2", A).str() == "2 * u1.v2 - 1");
}
