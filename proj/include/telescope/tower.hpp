#pragma once

#include "telescope/ratfunc.hpp"

#include <optional>
#include <vector>

namespace telescope {

// Coefficient tower Q < Q(n) < Q(n)(k).
using QFunc = RatFunc<Rational>;  // univariate rational function over Q
using KPoly = UniPoly<QFunc>;     // polynomial in k with Q(n) coefficients
using KFunc = RatFunc<QFunc>;     // element of Q(n,k), rational in k over Q(n)

inline QFunc qfunc_shift(const QFunc& f, long a) { return f.shift_arg(a); }

inline KPoly kpoly_shift_n(const KPoly& p, long a) {
    if (a == 0) return p;
    std::vector<QFunc> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.push_back(qfunc_shift(q, a));
    return KPoly(std::move(c));
}

inline KPoly kpoly_shift_k(const KPoly& p, long a) { return p.shift(a); }

inline KFunc kfunc_shift_n(const KFunc& f, long a) {
    if (a == 0) return f;
    return KFunc(kpoly_shift_n(f.num(), a), kpoly_shift_n(f.den(), a));
}

inline KFunc kfunc_shift_k(const KFunc& f, long a) {
    if (a == 0) return f;
    return KFunc(f.num().shift(a), f.den().shift(a));
}

/// Embeds a polynomial in n as a k-constant element of Q(n)[k].
inline KPoly kpoly_from_n(const QPoly& p) { return KPoly(QFunc(p)); }

/// Embeds a polynomial in k (rational coefficients) into Q(n)[k].
inline KPoly kpoly_from_k(const QPoly& p) {
    std::vector<QFunc> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(QFunc(x));
    return KPoly(std::move(c));
}

/// The monomial k as an element of Q(n)[k].
inline KPoly kpoly_var_k() { return KPoly::var(); }

inline std::optional<Rational> qfunc_eval(const QFunc& f, const Rational& x) {
    return f.eval(x);
}

/// Bivariate evaluation; nullopt when any denominator vanishes at the point.
inline std::optional<Rational> kfunc_eval(const KFunc& f, const Rational& n0, const Rational& k0) {
    auto at = [&](const KPoly& p) -> std::optional<Rational> {
        Rational acc(0);
        for (int i = p.degree(); i >= 0; --i) {
            auto c = p.coeff(i).eval(n0);
            if (!c) return std::nullopt;
            acc = acc * k0 + *c;
        }
        return acc;
    };
    auto num = at(f.num()), den = at(f.den());
    if (!num || !den || den->is_zero()) return std::nullopt;
    return *num / *den;
}

/// Substitutes k = beta*n + gamma, collapsing Q(n)[k] into Q(n).
inline QFunc kpoly_on_line(const KPoly& p, long beta, long gamma) {
    QFunc line(QPoly(std::vector<Rational>{Rational(gamma), Rational(beta)}));
    return p.eval<QFunc>(line);
}

/// Substitutes k = beta*n + gamma into an element of Q(n,k).
/// Throws when the denominator vanishes identically on the line.
inline QFunc kfunc_on_line(const KFunc& f, long beta, long gamma) {
    QFunc den = kpoly_on_line(f.den(), beta, gamma);
    if (den.is_zero()) throw std::domain_error("pole-on-line");
    return kpoly_on_line(f.num(), beta, gamma) / den;
}

/// Integer roots of p (over Q(n), in an auxiliary variable): the integers r
/// with p(r) identically zero in n. Candidates come from a specialization of n
/// at an integer point that preserves the leading coefficient; each candidate
/// is confirmed by exact symbolic substitution.
inline std::vector<Int> integer_roots_qn(const UniPoly<QFunc>& p) {
    if (p.is_zero()) throw std::domain_error("integer_roots: zero polynomial");
    if (p.degree() == 0) return {};
    static const long probes[] = {17, 29, 41, 57, 71, 93, 111, 135};
    for (long n0 : probes) {
        std::vector<Rational> spec;
        spec.reserve(p.coeffs().size());
        bool ok = true;
        for (const auto& c : p.coeffs()) {
            auto v = c.eval(Rational(n0));
            if (!v) {
                ok = false;
                break;
            }
            spec.push_back(*v);
        }
        if (!ok || spec.back().is_zero()) continue;  // degree dropped, try the next point
        QPoly q(std::move(spec));
        std::vector<Int> confirmed;
        for (const auto& cand : integer_roots_q(q)) {
            QFunc value = p.eval<QFunc>(QFunc(Rational(cand)));
            if (value.is_zero()) confirmed.push_back(cand);
        }
        return confirmed;
    }
    throw std::domain_error("integer_roots: no valid specialization point found");
}

inline std::vector<Int> integer_roots(const UniPoly<QFunc>& p) { return integer_roots_qn(p); }

inline std::optional<long> as_integer(const QFunc& x) {
    if (!x.is_constant()) return std::nullopt;
    return as_integer(x.constant_value());
}

}  // namespace telescope
