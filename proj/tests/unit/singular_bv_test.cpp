#include "takagi/singular_bv.hpp"

#include "takagi/local_levels.hpp"
#include "takagi/omega.hpp"
#include "takagi/takagi_eval.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace takagi;
using namespace takagi::testutil;

namespace {

// random exact PL function on a random dyadic-ish grid
PLFunction random_pl(std::mt19937_64& g, std::size_t segments) {
    std::vector<Rat> grid{Rat(0)};
    std::set<Rat> interior;
    while (interior.size() < segments - 1)
        interior.insert(random_rational(g, 512));
    interior.erase(Rat(0));
    interior.erase(Rat(1));
    for (const Rat& x : interior) grid.push_back(x);
    grid.push_back(Rat(1));
    std::vector<Rat> values;
    for (std::size_t i = 0; i < grid.size(); ++i)
        values.push_back(random_rational(g, 997) - Rat(1, 3));
    return PLFunction(std::move(grid), std::move(values));
}

} // namespace

TEST_CASE("flattened_takagi: reference values") {
    CHECK(flattened_takagi(Rat(5, 24)) == Rat(13, 24));
    CHECK(flattened_takagi(Rat(7, 16)) == Rat(9, 16));   // x_b = 1/3
    CHECK(flattened_takagi(Rat(1)) == Rat(0));
    CHECK(flattened_takagi(Rat(0)) == Rat(0));
    CHECK_THROWS_AS(flattened_takagi(Rat(5, 3)), std::domain_error);
}

TEST_CASE("takagi_singular: reference values") {
    CHECK(takagi_singular(Rat(0)) == Rat(0));
    CHECK(takagi_singular(Rat(1)) == Rat(1));
    CHECK(takagi_singular(Rat(7, 16)) == Rat(1));
    CHECK(takagi_singular(Rat(5, 24)) == Rat(3, 4));
}

TEST_CASE("flattening agrees with tau on Omega^L and has slope -1 on gaps") {
    std::mt19937_64 g(31);
    for (int i = 0; i < 200; ++i) {
        BinExp member = left_endpoint(random_binexp(g, 5, 6));
        Rat x = member.value();
        CHECK(flattened_takagi(x) == takagi_exact(member));
    }
    for (const GapInterval& gap : enumerate_gap_intervals(10)) {
        if (gap.B.bits.empty()) continue;
        Rat mid = (gap.x_minus + gap.x_plus) / Rat(2);
        Rat at_minus = takagi_exact(gap.x_minus);
        CHECK(flattened_takagi(mid) == at_minus - (mid - gap.x_minus));
        CHECK(flattened_takagi(gap.x_plus) == at_minus - (gap.x_plus - gap.x_minus));
        // tau^S constant across the closed gap
        Rat s = takagi_singular(gap.x_minus);
        CHECK(takagi_singular(mid) == s);
        CHECK(takagi_singular(gap.x_plus) == s);
    }
}

TEST_CASE("Jordan decomposition: tau^L + x = tau^S, downward part exact") {
    std::mt19937_64 g(32);
    for (int i = 0; i < 150; ++i) {
        Rat x = random_rational(g, 20000);
        CHECK(flattened_takagi(x) + x == takagi_singular(x));
    }
}

TEST_CASE("sample_pl: reference values") {
    PLFunction tent = sample_pl(FunctionTag::partial(1), 1);
    CHECK(tent.values() == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(0)});

    PLFunction ts = sample_pl(FunctionTag::tauS(), 8);
    for (std::size_t i = 1; i < ts.size(); ++i)
        CHECK(ts.values()[i - 1] <= ts.values()[i]);
    CHECK(ts.values().front() == Rat(0));
    CHECK(ts.values().back() == Rat(1));

    PLFunction tl = sample_pl(FunctionTag::tauL(), 4);
    CHECK(tl.eval(Rat(7, 16)) == Rat(9, 16));

    // for depth >= n the TauPartial sample is the function itself
    PLFunction tp = sample_pl(FunctionTag::partial(3), 6);
    std::mt19937_64 g(33);
    for (int i = 0; i < 30; ++i) {
        Rat x = random_rational(g, 3000);
        CHECK(tp.eval(x) == takagi_partial(x, 3));
    }

    SampleLimits tight{6};
    CHECK_THROWS_AS(sample_pl(FunctionTag::tauL(), 7, tight), resource_error);
}

TEST_CASE("PLFunction validation and interpolation") {
    CHECK_THROWS_AS(PLFunction({Rat(0), Rat(1)}, {Rat(0)}), std::invalid_argument);
    CHECK_THROWS_AS(PLFunction({Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PLFunction({Rat(0), Rat(1, 2)}, {Rat(0), Rat(1)}),
                    std::invalid_argument);
    PLFunction f({Rat(0), Rat(1, 2), Rat(1)}, {Rat(0), Rat(1), Rat(0)});
    CHECK(f.eval(Rat(1, 4)) == Rat(1, 2));
    CHECK(f.eval(Rat(1, 2)) == Rat(1));
    CHECK(f.eval(Rat(3, 4)) == Rat(1, 2));
}

TEST_CASE("total_variation: monotone and constant cases") {
    for (unsigned d : {4u, 6u, 8u}) {
        CHECK(total_variation(sample_pl(FunctionTag::tauS(), d)) == Rat(1));
    }
    PLFunction flat({Rat(0), Rat(1)}, {Rat(1, 3), Rat(1, 3)});
    CHECK(total_variation(flat) == Rat(0));
}

TEST_CASE("TauL sample variation follows the exact ballot law") {
    // TV_d = 2 - 2 C(d, floor(d/2)) / 2^d, a consequence of the singular
    // measure giving a depth-d cell with digit word w the mass (D_d(w)+1)/2^d
    Rat prev(0);
    for (unsigned d = 1; d <= 10; ++d) {
        Rat tv = total_variation(sample_pl(FunctionTag::tauL(), d));
        mpz_class central;
        mpz_bin_uiui(central.get_mpz_t(), d, d / 2);
        CHECK(tv == Rat(2) - Rat(2 * central, pow2(d)));
        CHECK(prev <= tv);
        CHECK(tv < Rat(2));
        prev = tv;
    }
}

TEST_CASE("upper_set_perimeter: reference values") {
    PLFunction tent = sample_pl(FunctionTag::partial(1), 1);
    CHECK(upper_set_perimeter(tent, Rat(1, 4)) == 2);
    CHECK(upper_set_perimeter(tent, Rat(3, 4)) == 0);
    CHECK_THROWS_AS(upper_set_perimeter(tent, Rat(1, 2)), degenerate_level_error);

    PLFunction tl = sample_pl(FunctionTag::tauL(), 10);
    Rat t = Rat(1, 3) + Rat(1, pow2(15));
    std::uint64_t perim = upper_set_perimeter(tl, t);
    CHECK(perim >= 2);
    CHECK(perim % 2 == 0);
}

TEST_CASE("keystone: coarea integral equals total variation exactly") {
    std::mt19937_64 g(34);
    for (int i = 0; i < 60; ++i) {
        PLFunction f = random_pl(g, 2 + g() % 30);
        CHECK(coarea_integral(f) == total_variation(f));
    }
    for (unsigned d = 2; d <= 10; ++d) {
        PLFunction tl = sample_pl(FunctionTag::tauL(), d);
        CHECK(coarea_integral(tl) == total_variation(tl));
        PLFunction ts = sample_pl(FunctionTag::tauS(), d);
        CHECK(coarea_integral(ts) == Rat(1));
    }
    PLFunction tent = sample_pl(FunctionTag::partial(1), 1);
    CHECK(coarea_integral(tent) == Rat(1));
}

TEST_CASE("local_level_count_estimate: reference values") {
    CHECK(local_level_count_estimate(Rat(2, 3) + Rat(1, 1024), 10) == 0);
    // level 1/2 has infinitely many local level sets nearby; tau exceeds 1/2
    // strictly between consecutive family points, so the upper set shatters
    // just above the level
    PLFunction tl = sample_pl(FunctionTag::tauL(), 12);
    Rat eps(1, mpz_class(5 * pow2(20)));   // denominator 5: never collides
    CHECK(local_level_count_estimate(tl, Rat(1, 2) + eps) >= 2);
    CHECK(local_level_count_estimate(tl, Rat(1, 2) - eps) >= 1);
    // a level equal to a sampled value is rejected as degenerate
    CHECK_THROWS_AS(local_level_count_estimate(tl, flattened_takagi(Rat(1, 8))),
                    degenerate_level_error);
}
