#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotlab/symfun.hpp"
#include "rotlab/text_io.hpp"

#include <functional>

using namespace rotlab;

namespace {

// independent oracle: enumerate the admissible index sequences directly
FreePoly elem_brute(int k, const IndexSubset& s, VarFamily f, const AlphabetPtr& alph) {
    FreePoly out = FreePoly::zero(alph);
    if (k < 0) return out;
    std::vector<int> idx(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int pos, int max_allowed) {
        if (pos == k) {
            std::vector<Gen> ls;
            for (int i : idx) ls.push_back(family_gen(f, i));
            out += FreePoly::word(alph, Word(std::move(ls)));
            return;
        }
        for (int m : s.members()) {
            if (m >= max_allowed) continue;
            idx[size_t(pos)] = m;
            rec(pos + 1, m);
        }
    };
    rec(0, 1 << 20);
    return out;
}

FreePoly super_brute(int k, const IndexSubset& s, const BarPattern& bars, VarFamily f,
                     const AlphabetPtr& alph) {
    FreePoly out = FreePoly::zero(alph);
    if (k < 0) return out;
    std::vector<int> idx(static_cast<size_t>(k));
    std::function<void(int)> rec = [&](int pos) {
        if (pos == k) {
            // weakly decreasing, strict after every unbarred letter
            for (int j = 0; j + 1 < k; ++j) {
                if (idx[size_t(j)] < idx[size_t(j + 1)]) return;
                if (!bars.is_barred(idx[size_t(j)]) && idx[size_t(j)] == idx[size_t(j + 1)]) return;
            }
            std::vector<Gen> ls;
            for (int i : idx) ls.push_back(family_gen(f, i));
            out += FreePoly::word(alph, Word(std::move(ls)));
            return;
        }
        for (int m : s.members()) {
            idx[size_t(pos)] = m;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("elementary symmetric function basics") {
    auto A = share(Alphabet::uv(3));
    IndexSubset s123{1, 2, 3};
    CHECK(elem(0, s123, VarFamily::u, A) == FreePoly::one(A));
    CHECK(elem(0, IndexSubset{}, VarFamily::u, A) == FreePoly::one(A));
    CHECK(elem(2, s123, VarFamily::u, A) == parse_free_poly("u3.u2 + u3.u1 + u2.u1", A));
    CHECK(elem(4, s123, VarFamily::u, A).is_zero());
    CHECK(elem(-1, s123, VarFamily::u, A).is_zero());
    CHECK(elem(1, s123, VarFamily::v, A) == parse_free_poly("v1 + v2 + v3", A));
}

TEST_CASE("elem matches the brute-force enumeration for N <= 5") {
    auto A = share(Alphabet::uv(5));
    for (const IndexSubset& s : IndexSubset::all(5))
        for (int k = 0; k <= 5; ++k)
            CHECK(elem(k, s, VarFamily::u, A) == elem_brute(k, s, VarFamily::u, A));
}

TEST_CASE("monomial count of elem is a binomial coefficient") {
    auto A = share(Alphabet::uv(5));
    for (const IndexSubset& s : IndexSubset::all(5))
        for (int k = 0; k <= int(s.size()); ++k)
            CHECK(long(elem(k, s, VarFamily::u, A).term_count()) == binom(int(s.size()), k));
}

TEST_CASE("Pieri-style recursion") {
    auto A = share(Alphabet::uv(5));
    for (const IndexSubset& s : IndexSubset::all(4)) {
        int m = s.empty() ? 1 : s.members().back() + 1;
        if (m > 5) continue;
        std::vector<int> ext = s.members();
        ext.push_back(m);
        IndexSubset s_ext(ext);
        for (int k = 0; k <= 5; ++k) {
            FreePoly lhs = elem(k, s_ext, VarFamily::u, A);
            FreePoly rhs = FreePoly::gen(A, u(uint16_t(m))) * elem(k - 1, s, VarFamily::u, A) +
                           elem(k, s, VarFamily::u, A);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("super elementary symmetric functions") {
    auto A = share(Alphabet::uv(4));

    // no bars: agrees with elem everywhere
    BarPattern none;
    for (const IndexSubset& s : IndexSubset::all(4))
        for (int k = 0; k <= 5; ++k)
            CHECK(super_elem(k, s, none, VarFamily::u, A) == elem(k, s, VarFamily::u, A));

    // a single barred letter repeats
    BarPattern bar1 = BarPattern::from_mask(0b0001, 4);
    CHECK(super_elem(3, IndexSubset{1}, bar1, VarFamily::u, A) ==
          parse_free_poly("u1.u1.u1", A));

    // S = {1,2}, 1 barred, 2 unbarred, k = 2
    CHECK(super_elem(2, IndexSubset{1, 2}, bar1, VarFamily::u, A) ==
          parse_free_poly("u2.u1 + u1.u1", A));

    // brute-force agreement over every barring of {1..4}
    for (unsigned mask = 0; mask < 16; ++mask) {
        BarPattern bars = BarPattern::from_mask(mask, 4);
        for (const IndexSubset& s : IndexSubset::all(4))
            for (int k = 0; k <= 5; ++k)
                CHECK(super_elem(k, s, bars, VarFamily::u, A) ==
                      super_brute(k, s, bars, VarFamily::u, A));
    }
}

TEST_CASE("product_over_subset ordering and unit") {
    auto A = share(Alphabet::uv(3));
    std::vector<CentralPoly> gs;
    for (int i = 1; i <= 3; ++i)
        gs.push_back(series_from_spec(SeriesSpec::linear(SeriesVar::x, u(uint16_t(i))), A, 3));

    CentralPoly p13 = product_over_subset(gs, IndexSubset{1, 3});
    CHECK(p13.coeff({2, 0}) == parse_free_poly("u3.u1", A)); // g3 g1, largest leftmost

    CHECK(product_over_subset(gs, IndexSubset{}) == CentralPoly::one(A, 3));

    CentralPoly p123 = product_over_subset(gs, IndexSubset{1, 2, 3});
    CHECK(p123.coeff({2, 0}) == elem(2, IndexSubset{1, 2, 3}, VarFamily::u, A));

    std::vector<CentralPoly> mixed = gs;
    mixed[1] = CentralPoly::one(A, 4);
    CHECK_THROWS_AS(product_over_subset(mixed, IndexSubset{1, 2}), std::invalid_argument);
}
