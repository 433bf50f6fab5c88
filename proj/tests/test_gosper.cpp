#include "doctest.h"

#include "telescope/gosper.hpp"

#include <random>

using namespace telescope;

namespace {

QPoly qp(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return QPoly(std::move(v));
}

QFunc qf(std::initializer_list<long> num, std::initializer_list<long> den) {
    return QFunc(qp(num), qp(den));
}

bool certificate_identity(const QFunc& y, const QFunc& r) {
    return (y.shift_arg(1) * r - y - QFunc(1)).is_zero();
}

}  // namespace

TEST_CASE("gosper normal form examples") {
    // r = (k+1)/k -> a = 1, b = 1, c = k
    auto nf1 = gosper_form(qf({1, 1}, {0, 1}));
    CHECK(nf1.a == QPoly(Rational(1)));
    CHECK(nf1.b == QPoly(Rational(1)));
    CHECK(nf1.c == qp({0, 1}));
    // r = 2 -> a = 2, b = 1, c = 1
    auto nf2 = gosper_form(QFunc(2));
    CHECK(nf2.a == QPoly(Rational(2)));
    CHECK(nf2.b.is_one());
    CHECK(nf2.c.is_one());
    // r = k+1 -> a = k+1, b = 1, c = 1
    auto nf3 = gosper_form(QFunc(qp({1, 1})));
    CHECK(nf3.a == qp({1, 1}));
    CHECK(nf3.b.is_one());
    CHECK(nf3.c.is_one());
}

TEST_CASE("gosper_form invariant: gcd(a(k), b(k+h)) = 1 for h >= 0") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long> dc(1, 6);
    for (int trial = 0; trial < 30; ++trial) {
        QPoly num(Rational(1)), den(Rational(1));
        for (int i = 0; i < 2; ++i) num *= qp({dc(rng), 1});
        for (int i = 0; i < 2; ++i) den *= qp({dc(rng), 1});
        QFunc r(num, den);
        if (r.is_zero()) continue;
        auto nf = gosper_form(r);
        for (long h = 0; h <= 12; ++h)
            CHECK(poly_gcd(nf.a, nf.b.shift(h)).degree() == 0);
        // reconstruction identity (also asserted inside gosper_form)
        CHECK(QFunc(nf.a, nf.b) * QFunc(nf.c.shift(1), nf.c) == r);
    }
}

TEST_CASE("gosper certificate examples") {
    // t = k: r = (k+1)/k, y = (k-1)/2
    auto c1 = gosper(qf({1, 1}, {0, 1}));
    REQUIRE(c1.has_value());
    CHECK(certificate_identity(c1->y, qf({1, 1}, {0, 1})));
    CHECK(c1->y == qf({-1, 1}, {2}));
    // t = 2^k: r = 2, y = 1
    auto c2 = gosper(QFunc(2));
    REQUIRE(c2.has_value());
    CHECK(c2->y == QFunc(1));
    // t = k!: r = k+1, not summable
    CHECK_FALSE(gosper(QFunc(qp({1, 1}))).has_value());
}

TEST_CASE("k! is not summable: brute-force cross-check at small degrees") {
    // no rational y = p/q with the tried denominators and deg p <= 5 satisfies
    // y(k+1)(k+1) - y(k) = 1
    const QFunc r(qp({1, 1}));
    for (const QPoly& q : {qp({1}), qp({0, 1}), qp({1, 1}), qp({0, 1, 1})}) {
        // y = p/q: (k+1) p(k+1) q(k) - p(k) q(k+1) = q(k) q(k+1), linear in p
        const QPoly lhs_rhs = q * q.shift(1);
        std::vector<std::vector<Rational>> M;
        std::vector<Rational> rhs;
        std::vector<QPoly> cols;
        for (int i = 0; i <= 5; ++i) {
            QPoly ki = QPoly::monomial(Rational(1), i);
            cols.push_back(qp({1, 1}) * ki.shift(1) * q - ki * q.shift(1));
        }
        int maxdeg = lhs_rhs.degree();
        for (const auto& c : cols) maxdeg = std::max(maxdeg, c.degree());
        for (int t = 0; t <= maxdeg; ++t) {
            std::vector<Rational> row;
            for (const auto& c : cols) row.push_back(c.coeff(t));
            M.push_back(row);
            rhs.push_back(lhs_rhs.coeff(t));
        }
        auto sol = solve_linear(M, rhs);
        CHECK_FALSE(sol.particular.has_value());
    }
}

TEST_CASE("round trip: gosper recovers telescoped differences") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> dc(1, 6), dnum(1, 3);
    std::uniform_int_distribution<int> nf(1, 2);
    int done = 0;
    while (done < 100) {
        // T(k) with ratio r(k) = c0 * prod (k+a_i) / prod (k+b_j)
        Rational c0(dnum(rng), dnum(rng));
        if (rng() % 2) c0 = -c0;
        QPoly num(c0), den(Rational(1));
        for (int i = nf(rng); i > 0; --i) num *= qp({dc(rng), 1});
        for (int i = nf(rng); i > 0; --i) den *= qp({dc(rng), 1});
        QFunc r(num, den);
        if (r.is_constant() && r.constant_value().is_one()) continue;
        // t = T(k+1) - T(k) has ratio r(k) (r(k+1) - 1) / (r(k) - 1)
        QFunc rt = r * (r.shift_arg(1) - QFunc(1)) / (r - QFunc(1));
        auto cert = gosper(rt);
        REQUIRE(cert.has_value());
        // partial sums of t against the certificate, exactly
        bool usable = true;
        std::vector<Rational> T{Rational(1)};
        for (long k = 0; k <= 27 && usable; ++k) {
            auto rv = r.eval(Rational(k));
            if (!rv || rv->is_zero() || rv->is_one()) usable = false;
            else T.push_back(T.back() * *rv);
        }
        if (!usable) continue;
        auto t = [&](long k) { return T[k + 1] - T[k]; };
        auto y = [&](long k) { return cert->y.eval(Rational(k)); };
        Rational acc(0);
        for (long m = 0; m <= 25; ++m) {
            acc += t(m);
            auto ym1 = y(m + 1), y0 = y(0);
            if (!ym1 || !y0) { usable = false; break; }
            CHECK(acc == *ym1 * t(m + 1) - *y0 * t(0));
        }
        if (usable) ++done;
    }
}
