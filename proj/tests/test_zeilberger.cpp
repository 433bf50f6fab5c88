#include "doctest.h"

#include "paper_objects.hpp"
#include "telescope/zeilberger.hpp"

using namespace telescope;
using paper::npoly;

TEST_CASE("zeilberger on the binomial theorem row sum") {
    ProperTerm cnk;
    cnk.mul_binomial(LinForm{1, 0, 0}, LinForm{0, 1, 0});
    auto pair = zeilberger(cnk);
    REQUIRE(pair.has_value());
    CHECK(pair->op == OreOp({npoly({-2}), npoly({1})}));  // N - 2
    CHECK(verify_ct(cnk, *pair));
    // oracle comparison: sums are 2^n for n = 0..10
    SumRange r{0, 1, 0};
    Rational p(1);
    for (long n = 0; n <= 10; ++n) {
        CHECK(direct_sum(cnk, r, n) == p);
        p *= Rational(2);
    }
    CHECK(boundary_rhs(cnk, *pair, r).is_zero());
}

TEST_CASE("the four paper sums share the operator 4N - 27 and the paper rhs") {
    ClosedForm expected{{paper::rhs_four_sums()}};
    for (const auto& s : paper::four_sums()) {
        CAPTURE(s.name);
        auto pair = zeilberger(s.term);
        REQUIRE(pair.has_value());
        CHECK(pair->op.order() == 1);
        CHECK(pair->op == paper::op_four_sums());
        CHECK(verify_ct(s.term, *pair));
        SumRange range{0, s.upper_slope, s.upper_offset};
        ClosedForm rhs = boundary_rhs(s.term, *pair, range);
        CHECK(closed_form_equal(rhs, expected));
        for (long n = 0; n <= 40; ++n)
            CHECK(*rhs.eval(n) == paper::rhs_four_sums_factorial(n));
        // recurrence against directly evaluated sums
        auto values = [&](long n) -> std::optional<Rational> {
            return direct_sum(s.term, range, n);
        };
        for (long n = 0; n <= 30; ++n)
            CHECK(ore_apply(pair->op, values, n) == *rhs.eval(n));
    }
}

TEST_CASE("zeilberger on the A6256 summand") {
    ProperTerm a6 = paper::sum_a6256();
    auto pair = zeilberger(a6);
    REQUIRE(pair.has_value());
    CHECK(pair->op.order() == 2);
    CHECK(equal_up_to_unit(pair->op, paper::op_a6256()));
    CHECK(verify_ct(a6, *pair));
    ClosedForm rhs = boundary_rhs(a6, *pair, SumRange{0, 1, 0});
    CHECK(rhs.is_zero());
    // minimality: order 1 admits no telescoper
    CHECK_FALSE(zeilberger(a6, 1).has_value());
}

TEST_CASE("homogenize soundness against the oracle sums") {
    OreOp h = homogenize(paper::op_four_sums(), paper::rhs_four_sums());
    ProperTerm s1 = paper::sum1();
    SumRange range{0, 1, 0};
    auto values = [&](long n) -> std::optional<Rational> { return direct_sum(s1, range, n); };
    for (long n = 0; n <= 38; ++n) CHECK(ore_apply(h, values, n).is_zero());
}

TEST_CASE("verify_ct rejects a perturbed certificate") {
    ProperTerm s1 = paper::sum1();
    auto pair = zeilberger(s1);
    REQUIRE(pair.has_value());
    CHECK(verify_ct(s1, *pair));
    CTPair bad{pair->op, pair->cert + KFunc(QFunc(1))};
    CHECK_FALSE(verify_ct(s1, bad));
}

TEST_CASE("verify_ct accepts the hand-built pair for binomial(n,k)") {
    // L = N - 2 with R = -k/(n - k + 1), from Pascal's rule
    ProperTerm cnk;
    cnk.mul_binomial(LinForm{1, 0, 0}, LinForm{0, 1, 0});
    KPoly num = KPoly::var() * QFunc(Rational(-1));
    KPoly den = kpoly_from_n(paper::npoly({1, 1})) - KPoly::var();
    CTPair hand{OreOp({npoly({-2}), npoly({1})}), KFunc(num, den)};
    CHECK(verify_ct(cnk, hand));
}

TEST_CASE("boundary_rhs distinguishes capped and natural ranges") {
    // sum3 has a natural upper boundary but an inhomogeneous lower one
    ProperTerm s3 = paper::sum3();
    auto pair = zeilberger(s3);
    REQUIRE(pair.has_value());
    ClosedForm rhs = boundary_rhs(s3, *pair, SumRange{0, 1, 0});
    CHECK_FALSE(rhs.is_zero());
    CHECK(*rhs.eval(0) == Rational(-3));

    // an unsupported range: no vanishing certificate above b(n) = 3n + 1
    // for sum1 (the window is capped at 3n), so the range 0..3n+1 must fail
    CHECK_THROWS(boundary_rhs(paper::sum1(), *zeilberger(paper::sum1()),
                              SumRange{0, 3, 1}));
}
