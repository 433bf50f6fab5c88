#include "doctest.h"

#include "paper_objects.hpp"
#include "telescope/reader.hpp"

#include <random>

using namespace telescope;

TEST_CASE("parsing the paper inputs") {
    auto t1 = parse_term("3^j*binomial(3*n-j,2*n)");
    REQUIRE(std::holds_alternative<ProperTerm>(t1));
    const ProperTerm& p1 = std::get<ProperTerm>(t1);
    REQUIRE(p1.powers().size() == 1);
    CHECK(p1.powers()[0].base == Rational(3));
    CHECK(p1.powers()[0].expo == LinForm{0, 1, 0});
    REQUIRE(p1.binomials().size() == 1);
    CHECK(p1.binomials()[0].top == LinForm{3, -1, 0});
    CHECK(p1.binomials()[0].bottom == LinForm{2, 0, 0});
    CHECK(p1.binomials()[0].loc == Location::Numerator);

    auto t2 = parse_term("(3*x^2-2*x^3)^n");
    REQUIRE(std::holds_alternative<HyperexpTerm>(t2));
    const HyperexpTerm& h = std::get<HyperexpTerm>(t2);
    CHECK(h.prefactor.is_one());
    CHECK(h.base == paper::ruehr_base());

    auto t3 = parse_term("binomial(n,k)");
    REQUIRE(std::holds_alternative<ProperTerm>(t3));
    CHECK(std::get<ProperTerm>(t3).binomials().size() == 1);
}

TEST_CASE("** and ^ parse identically; j and k are interchangeable") {
    auto a = parse_term("3**j*binomial(3*n-j,2*n)");
    auto b = parse_term("3^k*binomial(3*n-k,2*n)");
    CHECK(std::get<ProperTerm>(a).str() == std::get<ProperTerm>(b).str());
    for (long n = 0; n <= 6; ++n)
        for (long k = -2; k <= 8; ++k)
            CHECK(std::get<ProperTerm>(a).eval(n, k) == std::get<ProperTerm>(b).eval(n, k));
}

TEST_CASE("parse errors carry a position; recognition errors name the reason") {
    CHECK_THROWS_AS(parse_expr("3*((n+1)"), ParseError);
    CHECK_THROWS_AS(parse_expr("3 $ 4"), ParseError);
    CHECK_THROWS_AS(parse_term("binomial(n^2,k)"), std::domain_error);   // not integer-linear
    CHECK_THROWS_AS(parse_term("1/(n+k)"), std::domain_error);           // non-constant divisor
    CHECK_THROWS_AS(parse_term("(x+1)^n + x"), std::domain_error);       // not c(x) f(x)^n
    CHECK_THROWS_AS(parse_term("x^k"), std::domain_error);
}

TEST_CASE("grammar round-trip on the paper terms") {
    const char* inputs[] = {
        "3^j*binomial(3*n-j,2*n)",        "(-3)^j*binomial(3*n-j,n)",
        "2^j*binomial(3*n+1,n-j)",        "(-4)^j*binomial(3*n+1,n+j+1)",
        "binomial(3*k,k)*binomial(3*n-3*k,n-k)",
    };
    for (const char* in : inputs) {
        auto t = std::get<ProperTerm>(parse_term(in));
        auto back = std::get<ProperTerm>(parse_term(t.str()));
        CHECK(back.str() == t.str());
    }
    auto h = std::get<HyperexpTerm>(parse_term("2*(3*x^2-2*x^3)^n"));
    auto hb = std::get<HyperexpTerm>(parse_term(h.str()));
    CHECK(hb.str() == h.str());
    CHECK(hb.base == h.base);
    CHECK(hb.prefactor == h.prefactor);
}

TEST_CASE("grammar round-trip on random proper terms") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<long> coef(-3, 3), base(2, 5), pick(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        ProperTerm t;
        long b = base(rng);
        LinForm expo{coef(rng), coef(rng), coef(rng)};
        if (expo.n == 0 && expo.k == 0 && expo.c == 0) expo.k = 1;
        t.mul_power(Rational(pick(rng) == 0 ? -b : b), expo);
        t.mul_binomial(LinForm{coef(rng), coef(rng), coef(rng)},
                       LinForm{coef(rng), coef(rng), coef(rng)},
                       pick(rng) == 0 ? Location::Denominator : Location::Numerator);
        if (pick(rng) == 0) t.mul_factorial(LinForm{0, 1, coef(rng) > 0 ? coef(rng) : 1});
        std::string s = t.str();
        auto back = std::get<ProperTerm>(parse_term(s));
        CHECK(back.str() == s);
    }
}

TEST_CASE("operator printing") {
    ClosedForm zero;
    CHECK(print_operator(paper::op_four_sums(), zero, OpStyle::Canonical) ==
          "(4)*N^1 + (-27)*N^0");
    // paper style of the Ruehr pair, with the paper's sign convention
    ClosedForm minus2 = ClosedForm::constant(Rational(-2));
    OreOp ruehr = paper::op_ruehr().canonical();
    CHECK(print_operator(ruehr, minus2, OpStyle::Paper) ==
          "[9*(n + 1)*(2*n + 1) - 2*(3*n + 4)*(3*n + 2)*N, 2]");
    // zero rhs prints as "0"
    CHECK(print_operator(paper::op_four_sums(), zero, OpStyle::Paper) ==
          "[27 - 4*N, 0]");
}

TEST_CASE("operator parse/print round-trip") {
    for (const OreOp& op : {paper::op_four_sums(), paper::op_a6256(),
                            paper::op_ruehr().canonical()}) {
        OreOp back = parse_operator(print_operator(op, ClosedForm::zero(), OpStyle::Canonical));
        CHECK(back == op);
    }
    CHECK(parse_operator("4*N - 27") == paper::op_four_sums());
    CHECK(parse_operator("(n+1)*N^2 - n*N + 3") ==
          OreOp({paper::npoly({3}), paper::npoly({0, -1}), paper::npoly({1, 1})}));
}

TEST_CASE("rational-function strings round-trip") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<long> c(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        // random bivariate rational function in (n, k)
        auto rpoly = [&]() {
            KPoly p(QFunc(Rational(c(rng))));
            p += KPoly::var() * QFunc(Rational(c(rng)));
            p += kpoly_from_n(QPoly(std::vector<Rational>{0, Rational(c(rng))}));
            p += KPoly::var() * KPoly::var() * QFunc(QPoly(std::vector<Rational>{0, Rational(c(rng))}));
            return p;
        };
        KPoly num = rpoly(), den = rpoly();
        if (num.is_zero() || den.is_zero()) continue;
        KFunc f(num, den);
        KFunc back = parse_ratfunc(print_ratfunc(f, "k"), "k");
        CHECK(back == f);
    }
    // the x flavor used for integral certificates
    KFunc g(KPoly::var() * QFunc(QPoly(std::vector<Rational>{1, 2})),
            KPoly(QFunc(Rational(3))) + KPoly::var());
    CHECK(parse_ratfunc(print_ratfunc(g, "x"), "x") == g);
}

TEST_CASE("qfunc strings round-trip") {
    QFunc q(paper::npoly({2, 3}) * paper::npoly({4, 3}) * Rational(3),
            paper::npoly({3, 2}) * paper::npoly({2, 1}) * Rational(2));
    CHECK(parse_qfunc(print_qfunc(q)) == q);
    CHECK(print_qfunc(QFunc(0)) == "0");
}

TEST_CASE("parse_linear_in_n") {
    CHECK(*parse_linear_in_n("n") == std::pair<long, long>{1, 0});
    CHECK(*parse_linear_in_n("2*n") == std::pair<long, long>{2, 0});
    CHECK(*parse_linear_in_n("2*n+1") == std::pair<long, long>{2, 1});
    CHECK(*parse_linear_in_n("5") == std::pair<long, long>{0, 5});
    CHECK_FALSE(parse_linear_in_n("n^2").has_value());
    CHECK_FALSE(parse_linear_in_n("k").has_value());
}

TEST_CASE("eval_expr follows the evaluation conventions") {
    auto e = parse_expr("binomial(-1,2*n)");
    CHECK(*eval_expr(e, {{"n", Rational(3)}}) == Rational(1));
    CHECK_FALSE(eval_expr(parse_expr("factorial(k)"), {{"k", Rational(-1)}}).has_value());
    CHECK(*eval_expr(parse_expr("2^k"), {{"k", Rational(-2)}}) == Rational(1, 4));
    CHECK_FALSE(eval_expr(parse_expr("1/(n-1)"), {{"n", Rational(1)}}).has_value());
    // unary minus binds looser than ^
    CHECK(*eval_expr(parse_expr("-3^2"), {}) == Rational(-9));
    CHECK(*eval_expr(parse_expr("(-3)^2"), {}) == Rational(9));
}
