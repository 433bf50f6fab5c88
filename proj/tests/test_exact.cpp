#include "doctest.h"

#include "telescope/linsolve.hpp"
#include "telescope/polynomial.hpp"
#include "telescope/tower.hpp"

#include <random>

using namespace telescope;

namespace {

QPoly qp(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return QPoly(std::move(v));
}

QPoly random_poly(std::mt19937_64& rng, int maxdeg, long height) {
    std::uniform_int_distribution<int> dd(0, maxdeg);
    std::uniform_int_distribution<long> dc(-height, height);
    int deg = dd(rng);
    std::vector<Rational> v(static_cast<std::size_t>(deg) + 1);
    for (auto& c : v) c = Rational(dc(rng));
    return QPoly(std::move(v));
}

// Independent resultant oracle: fraction-free determinant of the Sylvester matrix.
Rational sylvester_resultant(const QPoly& p, const QPoly& q) {
    const int m = p.degree(), n = q.degree();
    if (m < 0 || n < 0) return Rational(0);
    if (m == 0 && n == 0) return Rational(1);
    const int size = m + n;
    std::vector<std::vector<Rational>> M(size, std::vector<Rational>(size, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = p.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = q.coeff(n - j);
    Rational det(1), prev(1);
    int sign = 1;
    for (int col = 0; col < size; ++col) {
        int piv = col;
        while (piv < size && M[piv][col].is_zero()) ++piv;
        if (piv == size) return Rational(0);
        if (piv != col) {
            std::swap(M[piv], M[col]);
            sign = -sign;
        }
        for (int i = col + 1; i < size; ++i)
            for (int j = col + 1; j < size; ++j)
                M[i][j] = (M[col][col] * M[i][j] - M[col][j] * M[i][col]) / prev;
        prev = M[col][col];
    }
    det = M[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

TEST_CASE("rational arithmetic and canonical form") {
    Rational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(a.str() == "-3/2");
    CHECK(Rational::parse("-3/2") == a);
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS(Rational(1, 0));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int i = 0; i < 200; ++i) {
        Rational x(d(rng), d(rng) * 2 + 1), y(d(rng), d(rng) * 2 + 1);
        CHECK((x + y) - y == x);
        if (!y.is_zero()) CHECK((x * y) / y == x);
        CHECK(gcd(abs((x).numerator()), x.denominator()) == (x.is_zero() ? x.denominator() : 1));
    }
}

TEST_CASE("poly_core gcd examples") {
    // gcd(k^2 - 1, k - 1) = k - 1
    CHECK(poly_gcd(qp({-1, 0, 1}), qp({-1, 1})) == qp({-1, 1}));
    // gcd((k+2)(k+5), (k+5)(k+7)) = k + 5
    CHECK(poly_gcd(qp({10, 7, 1}), qp({35, 12, 1})) == qp({5, 1}));
    CHECK(poly_gcd(QPoly(), QPoly()).is_zero());
    CHECK(poly_gcd(qp({2, 4}), QPoly()) == qp({1, 2}).monic());
}

TEST_CASE("resultant of k - n and k + n over Q(n) is 2n") {
    QFunc n = QFunc::var();
    UniPoly<QFunc> p(std::vector<QFunc>{-n, QFunc(1)});  // k - n
    UniPoly<QFunc> q(std::vector<QFunc>{n, QFunc(1)});   // k + n
    QFunc r = poly_resultant(p, q);
    CHECK(r == QFunc(QPoly(std::vector<Rational>{Rational(0), Rational(2)})));
}

TEST_CASE("resultant matches the Sylvester determinant on random pairs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        QPoly p = random_poly(rng, 5, 20), q = random_poly(rng, 5, 20);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK(poly_resultant(p, q) == sylvester_resultant(p, q));
    }
}

TEST_CASE("gcd divides both inputs; resultant vanishes iff gcd nonconstant") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        QPoly p = random_poly(rng, 8, 100), q = random_poly(rng, 8, 100);
        if (i % 3 == 0) {  // force a common factor in a third of the cases
            QPoly f = random_poly(rng, 2, 10);
            if (!f.is_zero() && f.degree() > 0) {
                p *= f;
                q *= f;
            }
        }
        if (p.is_zero() && q.is_zero()) continue;
        auto core = poly_core(p, q);
        CHECK(poly_divides(core.gcd, p));
        CHECK(poly_divides(core.gcd, q));
        if (!p.is_zero() && !q.is_zero()) {
            CHECK(core.resultant.is_zero() == (core.gcd.degree() >= 1));
            if (!core.gcd.is_zero()) CHECK(core.gcd.lc().is_one());
        }
    }
}

TEST_CASE("integer roots over Q") {
    CHECK(integer_roots_q(qp({-1, 1})) == std::vector<Int>{1});
    // (j - 2)(j + 3) = j^2 + j - 6
    CHECK(integer_roots_q(qp({-6, 1, 1})) == std::vector<Int>{-3, 2});
    CHECK(integer_roots_q(qp({0, 0, 3})) == std::vector<Int>{0});
    CHECK(integer_roots_q(qp({7})).empty());
    // rational but non-integer roots excluded: (2j-1)(j-4)
    CHECK(integer_roots_q(qp({4, -9, 2})) == std::vector<Int>{4});
}

TEST_CASE("integer roots over Q(n)") {
    QFunc n = QFunc::var();
    // (j - 1) -> {1}
    UniPoly<QFunc> p1(std::vector<QFunc>{QFunc(-1), QFunc(1)});
    CHECK(integer_roots_qn(p1) == std::vector<Int>{1});
    // j^2 - n has no integer root identically in n
    UniPoly<QFunc> p2(std::vector<QFunc>{-n, QFunc(0), QFunc(1)});
    CHECK(integer_roots_qn(p2).empty());
    // (j - 2)(j + 3) over Q(n) with an n-dependent unit factor
    UniPoly<QFunc> p3(std::vector<QFunc>{QFunc(-6) * n, n, n});
    CHECK(integer_roots_qn(p3) == std::vector<Int>{-3, 2});
}

TEST_CASE("solve_linear over Q") {
    using Row = std::vector<Rational>;
    auto sol = solve_linear<Rational>({Row{1, 0}, Row{0, 1}}, {Rational(1), Rational(2)});
    REQUIRE(sol.particular.has_value());
    CHECK(*sol.particular == Row{1, 2});
    CHECK(sol.nullspace.empty());

    auto sol2 = solve_linear<Rational>({Row{1, 1}}, {Rational(0)});
    REQUIRE(sol2.particular.has_value());
    CHECK(*sol2.particular == Row{0, 0});
    REQUIRE(sol2.nullspace.size() == 1);
    CHECK(sol2.nullspace[0][0] + sol2.nullspace[0][1] == Rational(0));
    CHECK_FALSE(sol2.nullspace[0][0].is_zero());

    auto bad = solve_linear<Rational>({Row{1, 1}, Row{1, 1}}, {Rational(0), Rational(1)});
    CHECK_FALSE(bad.particular.has_value());
}

TEST_CASE("solve_linear over Q(n), verified by substitution") {
    QFunc n = QFunc::var();
    std::vector<std::vector<QFunc>> M = {{n, QFunc(1)}, {QFunc(0), n + QFunc(1)}};
    std::vector<QFunc> rhs = {QFunc(1), QFunc(0)};
    auto sol = solve_linear(M, rhs);
    REQUIRE(sol.particular.has_value());
    CHECK(sol.nullspace.empty());
    for (std::size_t i = 0; i < M.size(); ++i) {
        QFunc acc(0);
        for (std::size_t j = 0; j < M[i].size(); ++j) acc += M[i][j] * (*sol.particular)[j];
        CHECK(acc == rhs[i]);
    }
    // the expected particular solution (1/n, 0)
    CHECK((*sol.particular)[0] == QFunc(1) / n);
    CHECK((*sol.particular)[1].is_zero());
}

TEST_CASE("solve_linear randomized substitution check") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> dc(-9, 9);
    std::uniform_int_distribution<int> dims(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
        int r = dims(rng), c = dims(rng);
        std::vector<std::vector<Rational>> M(r, std::vector<Rational>(c));
        std::vector<Rational> rhs(r);
        for (auto& row : M)
            for (auto& x : row) x = Rational(dc(rng));
        for (auto& x : rhs) x = Rational(dc(rng));
        auto sol = solve_linear(M, rhs);
        auto apply = [&](const std::vector<Rational>& v, bool homog) {
            for (int i = 0; i < r; ++i) {
                Rational acc(0);
                for (int j = 0; j < c; ++j) acc += M[i][j] * v[j];
                CHECK(acc == (homog ? Rational(0) : rhs[i]));
            }
        };
        if (sol.particular) apply(*sol.particular, false);
        for (const auto& v : sol.nullspace) apply(v, true);
    }
}

TEST_CASE("ratfunc canonical form under arithmetic") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
        QPoly pn = random_poly(rng, 3, 9), pd = random_poly(rng, 3, 9);
        QPoly qn = random_poly(rng, 3, 9), qd = random_poly(rng, 3, 9);
        if (pd.is_zero() || qd.is_zero()) continue;
        QFunc a(pn, pd), b(qn, qd);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        QFunc s = a + b;
        if (!s.is_zero()) {
            CHECK(poly_gcd(s.num(), s.den()).degree() == 0);
            CHECK(s.den().lc().is_one());
        }
    }
}
