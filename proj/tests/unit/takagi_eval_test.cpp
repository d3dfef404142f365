#include "takagi/takagi_eval.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace takagi;
using namespace takagi::testutil;

TEST_CASE("takagi_partial: reference values") {
    CHECK(takagi_partial(Rat(1, 2), 1) == Rat(1, 2));
    // four-term sum at 3/16: 3/16 + 3/16 + 1/16 + 1/16 = 1/2
    CHECK(takagi_partial(Rat(3, 16), 4) == Rat(1, 2));
    CHECK(takagi_partial(Rat(3, 16), 4) == oracle_tau_partial(Rat(3, 16), 4));
    for (unsigned n = 1; n <= 30; ++n) {
        Rat err = abs(takagi_partial(Rat(1, 3), n) - Rat(2, 3));
        CHECK(err <= Rat(2, 3) * pow2_rat(-static_cast<long>(n)));
    }
    CHECK(takagi_partial(Rat(1), 10) == Rat(0));
    CHECK_THROWS_AS(takagi_partial(Rat(3, 2), 1), std::domain_error);
}

TEST_CASE("takagi_exact: pinned reference values") {
    CHECK(takagi_exact(Rat(1, 3)) == Rat(2, 3));
    CHECK(takagi_exact(Rat(5, 24)) == Rat(13, 24));
    CHECK(takagi_exact(Rat(83581, 87040)) == Rat(1, 5));
    CHECK(takagi_exact(Rat(0)) == Rat(0));
    CHECK(takagi_exact(Rat(1, 8)) == Rat(3, 8));
    CHECK(takagi_exact(Rat(1)) == Rat(0));
    CHECK(takagi_exact(Rat(1, 2)) == Rat(1, 2));
    CHECK(takagi_exact(Rat(1, 6)) == Rat(1, 2));
    CHECK(takagi_exact(Rat(2, 3)) == Rat(2, 3));
    CHECK_THROWS_AS(takagi_exact(Rat(-1, 2)), std::domain_error);
}

TEST_CASE("takagi_exact: bracketed by partial sums on random rationals") {
    std::mt19937_64 g(424242);
    // tau(1/5) = 8/15, certified by the bracket tau_40 <= tau <= tau_40 + (2/3)2^-40
    Rat v = takagi_exact(Rat(1, 5));
    CHECK(v == Rat(8, 15));
    CHECK(tau_in_bracket(v, Rat(1, 5), 40));
    for (int i = 0; i < 40; ++i) {
        Rat x = random_rational(g, 5000);
        CHECK(tau_in_bracket(takagi_exact(x), x, 48));
    }
}

TEST_CASE("functional equations hold exactly") {
    std::mt19937_64 g(1);
    for (int i = 0; i < 200; ++i) {
        Rat x = random_rational(g, 10000);
        Rat t = takagi_exact(x);
        CHECK(t == takagi_exact(Rat(1) - x));              // reflection
        CHECK(Rat(2) * takagi_exact(x / Rat(2)) == t + x); // dyadic self-similarity
        CHECK(Rat(0) <= t);
        CHECK(t <= Rat(2, 3));
    }
}

TEST_CASE("dyadic closure and perfect approximation") {
    std::mt19937_64 g(2);
    for (int i = 0; i < 100; ++i) {
        unsigned n = 1 + static_cast<unsigned>(g() % 16);
        mpz_class k = mpz_class(g() % (1ul << n));
        Rat x(k, pow2(n));
        Rat t = takagi_exact(x);
        mpz_class scaled = t.den();
        CHECK(mpz_divisible_p(pow2(n).get_mpz_t(), scaled.get_mpz_t()));
        CHECK(t == takagi_partial(x, n));
        CHECK(t == takagi_partial(x, n + 7));
    }
}

TEST_CASE("approximants increase monotonically within the error bound") {
    std::mt19937_64 g(3);
    for (int i = 0; i < 50; ++i) {
        Rat x = random_rational(g, 100000);
        Rat t = takagi_exact(x);
        Rat prev(0);
        for (unsigned n = 1; n <= 30; ++n) {
            Rat tn = takagi_partial(x, n);
            CHECK(prev <= tn);
            CHECK(abs(tn - t) <= Rat(2, 3) * pow2_rat(-static_cast<long>(n)));
            prev = tn;
        }
    }
}

TEST_CASE("expansion independence for dyadic rationals") {
    std::mt19937_64 g(4);
    for (int i = 0; i < 60; ++i) {
        unsigned n = 1 + static_cast<unsigned>(g() % 14);
        mpz_class k = 1 + mpz_class(g() % ((1ul << n) - 1));
        Rat x(k, pow2(n));
        Rat t = takagi_exact(x);
        CHECK(takagi_exact(BinExp::of_rational(x, TailVariant::LowTail)) == t);
        CHECK(takagi_exact(BinExp::of_rational(x, TailVariant::HighTail)) == t);
    }
}

TEST_CASE("takagi_series: reference values and the coarse bound") {
    // all-zero digits: partial sum is (T+1)/2^(T+1), converging to tau(0) = 0
    BinExp zero = BinExp::parse("0.(0)");
    for (unsigned T : {1u, 4u, 10u, 20u}) {
        CHECK(takagi_series(zero, T) == Rat(mpz_class(T + 1), pow2(T + 1)));
        CHECK(abs(takagi_series(zero, T)) <=
              Rat(4 * (static_cast<long>(T) + 2)) * pow2_rat(-static_cast<long>(T)));
    }
    // 0.(01): geometric series gives tau = 2/3 (odd-m terms sum to -2/3)
    BinExp third = BinExp::parse("0.(01)");
    for (unsigned T : {8u, 16u, 32u}) {
        Rat bound = Rat(4 * (static_cast<long>(T) + 2)) * pow2_rat(-static_cast<long>(T));
        CHECK(abs(takagi_series(third, T) - Rat(2, 3)) <= bound);
        CHECK(abs(takagi_series(third, T, SeriesKind::DigitCount) - Rat(2, 3)) <= bound);
    }
    // 0.1(0) approaches tau(1/2) = 1/2
    CHECK(abs(takagi_series(BinExp::parse("0.1(0)"), 30) - Rat(1, 2)) <=
          Rat(4 * 32) * pow2_rat(-30));
    CHECK_THROWS_AS(takagi_series(zero, 0), std::domain_error);
}

TEST_CASE("takagi_series cross-checks the fixed-point evaluator") {
    std::mt19937_64 g(5);
    for (int i = 0; i < 40; ++i) {
        BinExp b = random_binexp(g, 5, 6);
        Rat t = takagi_exact(b);
        Rat bound = Rat(4 * 42) * pow2_rat(-40);
        CHECK(abs(takagi_series(b, 40) - t) <= bound);
        CHECK(abs(takagi_series(b, 40, SeriesKind::DigitCount) - t) <= bound);
    }
}

TEST_CASE("self-affine frames: reference values") {
    SelfAffineFrame f = SelfAffineFrame::at(Rat(3, 16), 4);
    CHECK(f.slope == 0);
    CHECK(f.tau_x0 == Rat(1, 2));
    CHECK(self_affine_eval(f, Rat(1, 2)) == Rat(17, 32));
    CHECK(self_affine_eval(f, Rat(1, 2)) == takagi_exact(Rat(7, 32)));
    CHECK(self_affine_eval(f, Rat(0)) == f.tau_x0);

    SelfAffineFrame half = SelfAffineFrame::at(Rat(0), 1);
    CHECK(half.slope == 1);
    std::mt19937_64 g(6);
    for (int i = 0; i < 30; ++i) {
        Rat w = random_rational(g, 4000);
        CHECK(self_affine_eval(half, w) == takagi_exact(w / Rat(2)));
        // general consistency: frame at a random dyadic anchor
        unsigned n = 1 + static_cast<unsigned>(g() % 8);
        mpz_class k = mpz_class(g() % (1ul << n));
        SelfAffineFrame fr = SelfAffineFrame::at(Rat(k, pow2(n)), n);
        Rat x = fr.x0 + w / Rat(pow2(n), 1);
        CHECK(self_affine_eval(fr, w) == takagi_exact(x));
    }
    CHECK_THROWS_AS(SelfAffineFrame::at(Rat(1, 3), 4), std::domain_error);
}
