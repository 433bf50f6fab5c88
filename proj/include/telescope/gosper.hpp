#pragma once

#include "telescope/linsolve.hpp"
#include "telescope/ratfunc.hpp"
#include "telescope/tower.hpp"

#include <optional>
#include <vector>

namespace telescope {

/// Gosper normal form of a reduced ratio r(k):
///   r(k) = (a(k)/b(k)) * (c(k+1)/c(k)),  gcd(a(k), b(k+h)) = 1 for all h >= 0.
template <class F>
struct GosperForm {
    UniPoly<F> a, b, c;
};

/// Certificate y(k) with y(k+1) r(k) - y(k) = 1; T(k) = y(k) t(k) then
/// telescopes any t with t(k+1)/t(k) = r(k).
template <class F>
struct GosperCertificate {
    RatFunc<F> y;
};

/// Degree-preserving rational specialization of a polynomial pair, used to
/// sieve dispersion candidates over Q before exact confirmation.
inline std::pair<QPoly, QPoly> dispersion_pair(const QPoly& a, const QPoly& b) { return {a, b}; }

inline std::pair<QPoly, QPoly> dispersion_pair(const UniPoly<QFunc>& a, const UniPoly<QFunc>& b) {
    static const long probes[] = {5, 7, 11, 13, 17, 23, 31, 43};
    auto spec = [](const UniPoly<QFunc>& p, long n0) -> std::optional<QPoly> {
        std::vector<Rational> v;
        v.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) {
            auto x = c.eval(Rational(n0));
            if (!x) return std::nullopt;
            v.push_back(*x);
        }
        QPoly q(std::move(v));
        if (q.degree() != p.degree()) return std::nullopt;
        return q;
    };
    for (long n0 : probes) {
        auto A = spec(a, n0), B = spec(b, n0);
        if (A && B) return {*A, *B};
    }
    throw std::domain_error("dispersion: no degree-preserving specialization");
}

/// Fujiwara root bound: every complex root of p has modulus
/// <= 2 * max_i |c_{d-i}/c_d|^(1/i).
inline Int root_bound(const QPoly& p) {
    const int d = p.degree();
    Int best(1);
    for (int i = 1; i <= d; ++i) {
        Rational ratio = abs(p.coeff(d - i) / p.lc());
        Int c = ratio.numerator() / ratio.denominator() + 1;
        Int r;
        mpz_root(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i));
        r += 1;
        if (r > best) best = r;
    }
    return 2 * best;
}

/// Nonnegative shifts h at which p(k) and q(k+h) share a factor, ascending.
/// A degree-preserving specialization maps any common factor to a common
/// factor, so sieving h over Q (within the root bound of the specialized
/// pair) is complete; each surviving candidate is confirmed exactly over F.
template <class F>
std::vector<long> dispersion_set(const UniPoly<F>& p, const UniPoly<F>& q) {
    std::vector<long> out;
    if (p.degree() <= 0 || q.degree() <= 0) return out;
    auto [A, B] = dispersion_pair(p, q);
    Int bound = root_bound(A) + root_bound(B);
    if (!bound.fits_slong_p()) throw std::domain_error("dispersion: root bound overflow");
    const long hmax = bound.get_si();
    for (long h = 0; h <= hmax; ++h) {
        if (poly_gcd(A, B.shift(h)).degree() <= 0) continue;
        if (poly_gcd(p, q.shift(h)).degree() > 0) out.push_back(h);
    }
    return out;
}

template <class F>
GosperForm<F> gosper_form(const RatFunc<F>& r) {
    if (r.is_zero()) throw std::domain_error("gosper_form: zero ratio");
    UniPoly<F> a = r.num(), b = r.den(), c(F(1));
    for (long h : dispersion_set(a, b)) {
        UniPoly<F> s = poly_gcd(a, b.shift(h));
        if (s.degree() <= 0) continue;
        a = poly_divexact(a, s);
        b = poly_divexact(b, s.shift(-h));
        for (long i = 1; i <= h; ++i) c *= s.shift(-i);
    }
    // r = (a/b) * (c(k+1)/c(k)) must hold exactly.
    if (RatFunc<F>(a, b) * RatFunc<F>(c.shift(1), c) != r)
        throw std::logic_error("gosper_form: normal form identity failed");
    return {a, b, c};
}

/// Degree bound for polynomial solutions x of A(k) x(k+1) - B(k) x(k) = C(k),
/// deg C <= rhs_deg. Negative means no solution can exist.
template <class F>
long gosper_degree_bound(const UniPoly<F>& A, const UniPoly<F>& B, long rhs_deg) {
    const int dA = A.degree(), dB = B.degree();
    if (dA != dB || A.lc() != B.lc()) return rhs_deg - std::max(dA, dB);
    const long mu = dA;
    const F alpha = A.coeff(static_cast<int>(mu) - 1), beta = B.coeff(static_cast<int>(mu) - 1);
    long best = rhs_deg - mu + 1;
    if (auto z = as_integer((beta - alpha) / A.lc()); z && *z >= 0) best = std::max(best, *z);
    return best;
}

/// Solves A(k) x(k+1) - B(k) x(k) = C(k) for deg x <= dmax (dmax < 0: x = 0
/// only works for C = 0). Returns any particular solution.
template <class F>
std::optional<UniPoly<F>> gosper_solve(const UniPoly<F>& A, const UniPoly<F>& B,
                                       const UniPoly<F>& C, long dmax) {
    if (dmax < 0) return C.is_zero() ? std::optional<UniPoly<F>>(UniPoly<F>()) : std::nullopt;
    // Column for xi_i: A*(k+1)^i - B*k^i.
    std::vector<UniPoly<F>> cols;
    const UniPoly<F> kp1(std::vector<F>{F(1), F(1)});
    UniPoly<F> shifted(F(1)), plain(F(1));
    int maxdeg = C.degree();
    for (long i = 0; i <= dmax; ++i) {
        cols.push_back(A * shifted - B * plain);
        maxdeg = std::max(maxdeg, cols.back().degree());
        shifted *= kp1;
        plain *= UniPoly<F>::var();
    }
    const std::size_t rows = static_cast<std::size_t>(maxdeg) + 1;
    std::vector<std::vector<F>> M(rows, std::vector<F>(cols.size(), F(0)));
    std::vector<F> rhs(rows, F(0));
    for (std::size_t t = 0; t < rows; ++t) {
        for (std::size_t i = 0; i < cols.size(); ++i) M[t][i] = cols[i].coeff((int)t);
        rhs[t] = C.coeff((int)t);
    }
    auto sol = solve_linear(M, rhs);
    if (!sol.particular) return std::nullopt;
    return UniPoly<F>(*sol.particular);
}

/// Gosper's algorithm on a consecutive-term ratio r; nullopt = not summable.
template <class F>
std::optional<GosperCertificate<F>> gosper(const RatFunc<F>& r) {
    GosperForm<F> nf = gosper_form(r);
    const UniPoly<F> bm = nf.b.shift(-1);
    long d = gosper_degree_bound(nf.a, bm, nf.c.degree());
    auto x = gosper_solve(nf.a, bm, nf.c, d);
    if (!x) return std::nullopt;
    GosperCertificate<F> cert{RatFunc<F>(bm * *x, nf.c)};
    // Exact identity y(k+1) r(k) - y(k) = 1 (cleared of denominators).
    RatFunc<F> check = cert.y.shift_arg(1) * r - cert.y;
    if (!(check - RatFunc<F>(F(1))).is_zero())
        throw std::logic_error("gosper: certificate identity failed");
    return cert;
}

}  // namespace telescope
