#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotlab/symfun.hpp"
#include "rotlab/text_io.hpp"

#include <random>

using namespace rotlab;

namespace {

AlphabetPtr uv2() {
    static AlphabetPtr a = share(Alphabet::uv(2));
    return a;
}

CentralPoly random_series(std::mt19937_64& rng, const AlphabetPtr& alph, int bound,
                          bool unit_constant) {
    std::uniform_int_distribution<int> nparts(0, 3), dx(0, bound), coef(-2, 2),
        pick(0, int(alph->size()) - 1), wdeg(0, 2);
    CentralPoly p = unit_constant ? CentralPoly::one(alph, bound) : CentralPoly::zero(alph, bound);
    int parts = nparts(rng);
    for (int i = 0; i < parts; ++i) {
        int a = dx(rng), b = dx(rng);
        if (a + b > bound || (a == 0 && b == 0)) continue;
        std::vector<Gen> ls;
        int d = wdeg(rng);
        for (int j = 0; j < d; ++j) ls.push_back(alph->generators()[size_t(pick(rng))]);
        int c = coef(rng);
        if (c == 0) c = 1;
        p.set_coeff({a, b},
                    p.coeff({a, b}) + FreePoly::term(alph, Rational(c), Word(std::move(ls))));
    }
    return p;
}

} // namespace

TEST_CASE("series construction from specs") {
    auto A = uv2();
    CentralPoly lin = series_from_spec(SeriesSpec::linear(SeriesVar::x, u(1)), A, 3);
    CHECK(lin.coeff({0, 0}) == FreePoly::one(A));
    CHECK(lin.coeff({1, 0}) == FreePoly::gen(A, u(1)));
    CHECK(lin.coeff({2, 0}).is_zero());

    CentralPoly geo = series_from_spec(SeriesSpec::geometric(SeriesVar::x, u(1)), A, 3);
    CHECK(geo.coeff({2, 0}) == parse_free_poly("u1.u1", A));
    CHECK(geo.coeff({3, 0}) == parse_free_poly("u1.u1.u1", A));

    CentralPoly trivial =
        series_from_spec(SeriesSpec::powers(SeriesVar::y, v(1), {Rational(0), Rational(0)}), A, 3);
    CHECK(trivial == CentralPoly::one(A, 3));
}

TEST_CASE("series multiplication and centrality") {
    auto A = uv2();
    auto lin = [&](SeriesVar var, Gen x) { return series_from_spec(SeriesSpec::linear(var, x), A, 2); };
    CentralPoly g2g1 = lin(SeriesVar::x, u(2)) * lin(SeriesVar::x, u(1));
    CHECK(g2g1.coeff({1, 0}) == parse_free_poly("u1 + u2", A));
    CHECK(g2g1.coeff({2, 0}) == parse_free_poly("u2.u1", A));

    CentralPoly one = CentralPoly::one(A, 2);
    CHECK(g2g1 * one == g2g1);
    CHECK(one * g2g1 == g2g1);

    // x and y are central, the coefficients are not
    CentralPoly gh = lin(SeriesVar::x, u(1)) * lin(SeriesVar::y, v(1));
    CentralPoly hg = lin(SeriesVar::y, v(1)) * lin(SeriesVar::x, u(1));
    CHECK(gh.coeff({1, 1}) == parse_free_poly("u1.v1", A));
    CHECK(hg.coeff({1, 1}) == parse_free_poly("v1.u1", A));
}

TEST_CASE("bound and alphabet mismatches are errors") {
    auto A = uv2();
    CentralPoly a = CentralPoly::one(A, 3), b = CentralPoly::one(A, 4);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a.coeff({4, 0}), std::out_of_range);
}

TEST_CASE("series inversion") {
    auto A = uv2();
    CentralPoly lin = series_from_spec(SeriesSpec::linear(SeriesVar::x, u(1)), A, 3);
    CentralPoly inv = series_inverse(lin);
    CHECK(inv.coeff({1, 0}) == parse_free_poly("- u1", A));
    CHECK(inv.coeff({2, 0}) == parse_free_poly("u1.u1", A));
    CHECK(inv.coeff({3, 0}) == parse_free_poly("- u1.u1.u1", A));
    CHECK(lin * inv == CentralPoly::one(A, 3));
    CHECK(inv * lin == CentralPoly::one(A, 3));

    CHECK(series_inverse(CentralPoly::one(A, 3)) == CentralPoly::one(A, 3));

    CentralPoly sans_unit = CentralPoly::monomial({1, 0}, FreePoly::gen(A, u(1)), 3);
    CHECK_THROWS_AS(series_inverse(sans_unit), std::invalid_argument);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        CentralPoly s = random_series(rng, A, 4, true);
        CHECK(series_inverse(series_inverse(s)) == s);
    }
}

TEST_CASE("series multiplication is associative with unit on random triples") {
    auto A = uv2();
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        CentralPoly a = random_series(rng, A, 6, false), b = random_series(rng, A, 6, false),
                    c = random_series(rng, A, 6, false);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("bidegree additivity of products") {
    auto A = uv2();
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 200; ++trial) {
        CentralPoly a = random_series(rng, A, 5, false), b = random_series(rng, A, 5, false);
        CentralPoly ab = a * b;
        for (const auto& [d, p] : ab.coeffs()) {
            bool reachable = false;
            for (const auto& [da, pa] : a.coeffs())
                for (const auto& [db, pb] : b.coeffs())
                    reachable |= da + db == d;
            CHECK(reachable);
        }
    }
}

TEST_CASE("coeff of subset products recovers elementary symmetric functions") {
    auto A = share(Alphabet::uv(5));
    std::vector<CentralPoly> gs;
    for (int i = 1; i <= 5; ++i)
        gs.push_back(series_from_spec(SeriesSpec::linear(SeriesVar::x, u(uint16_t(i))), A, 5));
    for (const IndexSubset& s : IndexSubset::all(5)) {
        CentralPoly prod = product_over_subset(gs, s);
        for (int k = 0; k <= int(s.size()); ++k)
            CHECK(prod.coeff({k, 0}) == elem(k, s, VarFamily::u, A));
    }
}

TEST_CASE("super generating function identity for every barring of {1..4}") {
    auto A = share(Alphabet::uv(4));
    const int bound = 6;
    for (unsigned mask = 0; mask < 16; ++mask) {
        BarPattern bars = BarPattern::from_mask(mask, 4);
        std::vector<CentralPoly> gs;
        for (int i = 1; i <= 4; ++i) {
            SeriesSpec spec = bars.is_barred(i)
                                  ? SeriesSpec::geometric(SeriesVar::x, u(uint16_t(i)))
                                  : SeriesSpec::linear(SeriesVar::x, u(uint16_t(i)));
            gs.push_back(series_from_spec(spec, A, bound));
        }
        for (const IndexSubset& s : IndexSubset::all(4)) {
            CentralPoly prod = product_over_subset(gs, s);
            for (int k = 0; k <= bound; ++k)
                CHECK(prod.coeff({k, 0}) == super_elem(k, s, bars, VarFamily::u, A));
        }
    }
}

TEST_CASE("central poly text form round-trips") {
    auto A = uv2();
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        CentralPoly p = random_series(rng, A, 4, trial % 2 == 0);
        CHECK(parse_central_poly(p.str(), A, p.bound()) == p);
    }
}
