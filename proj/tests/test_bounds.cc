#include <fodef/bounds.hh>
#include <fodef/errors.hh>

#include <doctest.h>

using namespace fodef;

TEST_CASE("Turan tail bound values")
{
    // Exact values and thresholds computed with Python's fractions module.
    CHECK(turan_tail_bound(3, 1) == Rational(9));
    CHECK(turan_tail_bound(3, 2) == Rational(135, 4));
    CHECK(turan_tail_bound(2, 5) == Rational(5, 8));
    CHECK(turan_tail_threshold(2) == 5);
    CHECK(turan_tail_threshold(3) == 35);
    CHECK(turan_tail_threshold(4) == 146);
    CHECK(turan_tail_peak(3) == 7);
    CHECK(turan_tail_bound(3, 35) < 1);
    CHECK(turan_tail_bound(3, 34) >= 1);
}

TEST_CASE("Turan tail bound is unimodal")
{
    for (int k = 2; k <= 5; ++k) {
        long long peak = turan_tail_peak(k);
        for (long long n = 1; n < peak; ++n)
            CHECK(turan_tail_bound(k, n + 1) >= turan_tail_bound(k, n));
        for (long long n = peak; n < peak + 40; ++n) {
            CHECK(turan_tail_decreasing_at(k, n));
            CHECK(turan_tail_bound(k, n + 1) < turan_tail_bound(k, n));
        }
    }
}

TEST_CASE("exact bound report at l = 16")
{
    auto r = alice_lower_bound(16);
    CHECK(r.n == 128);
    CHECK(r.k == 2);
    CHECK(r.lower_bound == 3);
    CHECK(r.applicable);
    // 128 * 127 * ... * 113 / 2^120, reduced with Python's fractions module.
    CHECK(r.p == Rational(Integer("7450090103550483315054253125"), Integer("5070602400912917605986812821504")));
    CHECK(r.p_holds);
    REQUIRE(r.q);
    CHECK(*r.q == Rational(1, Integer(1) << 119));
    CHECK(r.q_holds);
    CHECK(! alice_lower_bound(15).applicable);
}

TEST_CASE("alice_k")
{
    CHECK(alice_k(16) == 2);
    CHECK(alice_k(20) == 3);
    CHECK(alice_k(24) == 4);
    for (int ell = 16; ell <= 100; ++ell) {
        Integer fourth = Integer(ell) * ell * ell * ell;
        int k = alice_k(ell);
        CHECK(fourth <= Integer(1) << (ell + 4 - 2 * k));
        CHECK(fourth > Integer(1) << (ell + 4 - 2 * (k + 1)));
    }
    CHECK_THROWS_AS(alice_lower_bound(201), GuardExceeded);
}

TEST_CASE("the enclosure brackets the exact value")
{
    for (int ell : {20, 24, 26, 30}) {
        auto r = alice_lower_bound(ell);
        REQUIRE(r.q);
        CHECK(r.q_interval.lower.to_rational() <= *r.q);
        CHECK(*r.q <= r.q_interval.upper.to_rational());
    }
    for (int ell : {40, 64}) {
        auto r = alice_lower_bound(ell);
        CHECK(! r.q);
        auto lower = r.q_interval.lower.to_rational(), upper = r.q_interval.upper.to_rational();
        CHECK(lower < upper);
        CHECK((upper - lower) / upper < Rational(1, Integer(1) << 400));
    }
    for (int ell = 16; ell <= 64; ++ell) {
        auto r = alice_lower_bound(ell);
        CHECK(! (r.q_interval.upper < r.q_interval.lower));
        CHECK(r.p_holds);
        CHECK(r.q_holds);
    }
}

TEST_CASE("dyadic rounding")
{
    Dyadic x{Integer(0b101101), -3};
    auto down = round_dyadic(x, 3, false), up = round_dyadic(x, 3, true);
    CHECK(down.to_rational() == Rational(40, 8));
    CHECK(up.to_rational() == Rational(48, 8));
    CHECK(round_dyadic(x, 10, true).to_rational() == x.to_rational());
    CHECK(Dyadic{1, -1} < Dyadic{3, -2});
    CHECK(to_string(Rational(3, 6)) == "1/2");
    CHECK(to_string(Rational(4)) == "4");
}
