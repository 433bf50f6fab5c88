#include "doctest.h"

#include "paper_objects.hpp"
#include "telescope/term.hpp"

using namespace telescope;

TEST_CASE("generalized binomial values") {
    CHECK(binomial_value(Rational(3), 1) == Rational(3));
    CHECK(binomial_value(Rational(-1), 2) == Rational(1));  // (-1)(-2)/2
    CHECK(binomial_value(Rational(-1), 0) == Rational(1));
    CHECK(binomial_value(Rational(5), -1).is_zero());
    CHECK(binomial_value(Rational(2), 5).is_zero());  // 0 <= top < bottom
    CHECK(binomial_value(Rational(6), 4) == Rational(15));
}

TEST_CASE("eval_term") {
    ProperTerm c31;
    c31.mul_binomial(LinForm{1, 0, 0}, LinForm{0, 1, 0});  // C(n, k)
    CHECK(*c31.eval(3, 1) == Rational(3));
    CHECK(*c31.eval(-1, 2) == Rational(1));

    ProperTerm s1 = paper::sum1();
    CHECK(*s1.eval(1, 0) == Rational(3));  // C(3,2)
    CHECK(*s1.eval(2, 1) == Rational(15));

    ProperTerm denom;
    denom.mul_binomial(LinForm{1, 0, 0}, LinForm{0, 1, 0}, Location::Denominator);
    CHECK(*denom.eval(4, 2) == Rational(1, 6));
    CHECK_FALSE(denom.eval(2, 5).has_value());  // zero denominator factor: undefined

    ProperTerm fact;
    fact.mul_factorial(LinForm{0, 1, 0});
    CHECK(*fact.eval(0, 4) == Rational(24));
    CHECK_FALSE(fact.eval(0, -1).has_value());
}

TEST_CASE("shift quotients of simple factors") {
    ProperTerm pw;
    pw.mul_power(Rational(2), LinForm{0, 1, 0});  // 2^k
    KFunc qk = pw.shift_quotient(Var::K);
    CHECK(qk == KFunc(QFunc(2)));
    CHECK(pw.shift_quotient(Var::N) == KFunc(QFunc(1)));

    ProperTerm fact;
    fact.mul_factorial(LinForm{0, 1, 0});  // k!
    KFunc qf = fact.shift_quotient(Var::K);
    CHECK(qf == KFunc(KPoly::var() + KPoly(QFunc(1))));  // k + 1
}

TEST_CASE("shift quotient of the first paper summand") {
    ProperTerm s1 = paper::sum1();
    // quotient in k is 3(n-k)/(3n-k): numeric check at (n,k) = (2,1)
    KFunc qk = s1.shift_quotient(Var::K);
    auto v = kfunc_eval(qk, Rational(2), Rational(1));
    REQUIRE(v.has_value());
    CHECK(*v == Rational(3, 5));
    // structural: numerator 3(n-k), denominator (3n-k) up to normalization
    auto w = kfunc_eval(qk, Rational(5), Rational(2));
    CHECK(*w == Rational(9, 13));
}

TEST_CASE("quotient consistency grid for the five paper summands") {
    std::vector<ProperTerm> terms{paper::sum1(), paper::sum2(), paper::sum3(), paper::sum4(),
                                  paper::sum_a6256()};
    for (const auto& t : terms) {
        KFunc qk = t.shift_quotient(Var::K);
        KFunc qn = t.shift_quotient(Var::N);
        for (long n = 0; n <= 10; ++n)
            for (long k = -3; k <= 10; ++k) {
                auto f = t.eval(n, k);
                if (!f || f->is_zero()) continue;
                auto fk = t.eval(n, k + 1);
                auto qkv = kfunc_eval(qk, Rational(n), Rational(k));
                if (fk && qkv && !fk->is_zero()) CHECK(*fk / *f == *qkv);
                auto fn = t.eval(n + 1, k);
                auto qnv = kfunc_eval(qn, Rational(n), Rational(k));
                if (fn && qnv && !fn->is_zero()) CHECK(*fn / *f == *qnv);
            }
    }
}

TEST_CASE("support analysis of the paper summands") {
    // C(3k,k) C(3n-3k,n-k): natural on both sides
    VanishInfo a6 = paper::sum_a6256().support_analysis(2);
    CHECK(a6.lower_natural);
    REQUIRE(a6.upper.has_value());
    CHECK_FALSE(a6.upper->cap.has_value());
    CHECK(a6.upper->edge.slope == 1);
    CHECK(a6.upper->edge.offset == 0);
    // spot check: n=1, k=2 gives C(6,2)*C(-3,-1) = 0
    CHECK(paper::sum_a6256().eval(1, 2)->is_zero());

    // 2^k C(3n+1, n-k): lower not natural (n=0, k=-1 gives C(1,1) = 1)
    VanishInfo s3 = paper::sum3().support_analysis(1);
    CHECK_FALSE(s3.lower_natural);
    CHECK(*paper::sum3().eval(0, -1) == Rational(1, 2));
    REQUIRE(s3.upper.has_value());
    CHECK_FALSE(s3.upper->cap.has_value());
    CHECK(s3.upper->edge.slope == 1);

    // 3^k C(3n-k, 2n): window n < k <= 3n only
    VanishInfo s1 = paper::sum1().support_analysis(1);
    CHECK_FALSE(s1.lower_natural);
    REQUIRE(s1.upper.has_value());
    REQUIRE(s1.upper->cap.has_value());
    CHECK(s1.upper->edge.slope == 1);
    CHECK(s1.upper->cap->slope == 3);
    CHECK(s1.upper->cap->offset == 0);
    // beyond the cap the term does not vanish: n=1, k=4 gives 81*C(-1,2) = 81
    CHECK(*paper::sum1().eval(1, 4) == Rational(81));
}

TEST_CASE("support soundness: certified vanishing means exact zero") {
    std::vector<ProperTerm> terms{paper::sum1(), paper::sum2(), paper::sum3(), paper::sum4(),
                                  paper::sum_a6256()};
    for (const auto& t : terms) {
        VanishInfo info = t.support_analysis(2);
        for (long n = 0; n <= 10; ++n)
            for (long k = -5; k <= 3 * n + 5; ++k) {
                bool certified = false;
                if (info.lower_natural && k < 0) certified = true;
                if (info.upper && k > info.upper->edge.at(n) &&
                    (!info.upper->cap || k <= info.upper->cap->at(n)))
                    certified = true;
                if (certified) {
                    auto v = t.eval(n, k);
                    REQUIRE(v.has_value());
                    CHECK(v->is_zero());
                }
            }
    }
}

TEST_CASE("specialize_line on the first summand") {
    ProperTerm s1 = paper::sum1();
    // k = 0: g(n) = C(3n, 2n), values 1, 3, 15
    HyperTermN g = s1.specialize_line(0, 0);
    CHECK(*g.eval(0) == Rational(1));
    CHECK(*g.eval(1) == Rational(3));
    CHECK(*g.eval(2) == Rational(15));
    // k = 3n+1: g(n) = 3^(3n+1) C(-1, 2n) = 3*27^n
    HyperTermN h = s1.specialize_line(3, 1);
    CHECK(*h.eval(0) == Rational(3));
    CHECK(*h.eval(1) == Rational(81));
    CHECK(h.quotient == QFunc(27));
    // k = n: g(n) = 3^n
    HyperTermN d = s1.specialize_line(1, 0);
    CHECK(d.quotient == QFunc(3));
    CHECK(*d.eval(4) == Rational(81));
}

TEST_CASE("specialize_line agrees with eval_term along its line") {
    std::vector<ProperTerm> terms{paper::sum1(), paper::sum3(), paper::sum_a6256()};
    struct Line {
        long beta, gamma;
    };
    for (const auto& t : terms)
        for (Line ln : {Line{0, 0}, Line{1, 0}, Line{2, 1}}) {
            HyperTermN g = t.specialize_line(ln.beta, ln.gamma);
            for (long n = g.start; n <= g.start + 20; ++n) {
                auto direct = t.eval(n, ln.beta * n + ln.gamma);
                REQUIRE(direct.has_value());
                CHECK(*g.eval(n) == *direct);
            }
        }
}

TEST_CASE("specialize_line with a rational multiplier") {
    // M = k+1 on the line k = n: g(n) = (n+1) * 3^n
    ProperTerm s1 = paper::sum1();
    KFunc mult(KPoly::var() + KPoly(QFunc(1)));
    HyperTermN g = s1.specialize_line(1, 0, 0, &mult);
    CHECK(*g.eval(0) == Rational(1));
    CHECK(*g.eval(2) == Rational(27));
    CHECK(*g.eval(3) == Rational(108));
}

TEST_CASE("hyperexponential term evaluation") {
    HyperexpTerm t = paper::ruehr_left();
    CHECK(*t.eval(0, Rational(3, 2)) == Rational(1));  // 0^0 at the right endpoint
    CHECK(*t.eval(1, Rational(1)) == Rational(1));
    CHECK(*t.eval(2, Rational(1, 2)) == Rational(1, 4));  // (3/4 - 1/4)^2
    HyperexpTerm r = paper::ruehr_right();
    CHECK(*r.eval(0, Rational(0)) == Rational(2));
}
