#pragma once

#include "telescope/rational.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace telescope {

/// Dense univariate polynomial over a field K, coefficients lowest degree first.
/// The zero polynomial is the empty list; otherwise the top coefficient is nonzero.
template <class K>
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const K& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    UniPoly(long c) : UniPoly(K(c)) {}
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly var() { return UniPoly(std::vector<K>{K(0), K(1)}); }
    static UniPoly monomial(const K& c, int e) {
        if (c.is_zero()) return UniPoly();
        std::vector<K> v(static_cast<std::size_t>(e) + 1, K(0));
        v.back() = c;
        return UniPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    const K& coeff(int i) const {
        static const K zero{};
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(i)];
    }
    const K& lc() const {
        if (is_zero()) throw std::domain_error("UniPoly: lc of zero");
        return c_.back();
    }
    const std::vector<K>& coeffs() const { return c_; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    UniPoly operator+(const UniPoly& o) const {
        std::vector<K> v(std::max(c_.size(), o.c_.size()), K(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff((int)i) + o.coeff((int)i);
        return UniPoly(std::move(v));
    }
    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        std::vector<K> v(c_.size() + o.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
        return UniPoly(std::move(v));
    }
    UniPoly operator*(const K& s) const {
        if (s.is_zero()) return UniPoly();
        UniPoly r = *this;
        for (auto& c : r.c_) c = c * s;
        return r;
    }
    UniPoly operator/(const K& s) const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = c / s;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    /// Horner evaluation at any point type constructible from K (field extensions included).
    template <class A>
    A eval(const A& x) const {
        A acc = A(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + A(*it);
        return acc;
    }
    K operator()(const K& x) const { return eval<K>(x); }

    /// Substitution p(q).
    UniPoly compose(const UniPoly& q) const { return eval<UniPoly>(q); }

    /// p(x + a) for a small integer a.
    UniPoly shift(long a) const {
        if (a == 0 || is_zero()) return *this;
        return compose(UniPoly(std::vector<K>{K(a), K(1)}));
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<K> v(c_.size() - 1, K(0));
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * K(static_cast<long>(i));
        return UniPoly(std::move(v));
    }

    UniPoly pow(long e) const {
        if (e < 0) throw std::domain_error("UniPoly: negative power");
        UniPoly r(1), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this / lc();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
UniPoly<K> operator*(const K& s, const UniPoly<K>& p) {
    return p * s;
}

template <class K>
K field_pow(const K& base, long e) {
    if (e < 0) throw std::domain_error("field_pow: negative exponent");
    K r(1), b = base;
    while (e > 0) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

/// Division with remainder over a field: a = q*b + r, deg r < deg b.
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> poly_divmod(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    UniPoly<K> q, r = a;
    const K binv = K(1) / b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        K c = r.lc() * binv;
        int e = r.degree() - b.degree();
        auto t = UniPoly<K>::monomial(c, e);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

template <class K>
UniPoly<K> poly_divexact(const UniPoly<K>& a, const UniPoly<K>& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("poly_divexact: inexact division");
    return q;
}

template <class K>
bool poly_divides(const UniPoly<K>& d, const UniPoly<K>& a) {
    if (d.is_zero()) return a.is_zero();
    return poly_divmod(a, d).second.is_zero();
}

/// Pseudo-remainder: returns r with lc(b)^(deg a - deg b + 1) * a = q*b + r.
template <class K>
UniPoly<K> poly_prem(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.is_zero()) throw std::domain_error("poly_prem: division by zero polynomial");
    UniPoly<K> r = a;
    const K d = b.lc();
    long e = a.degree() - b.degree() + 1;
    if (e < 0) e = 0;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        auto t = UniPoly<K>::monomial(r.lc(), r.degree() - b.degree());
        r = r * d - t * b;
        --e;
    }
    return r * field_pow(d, std::max(e, 0L));
}

template <class K>
struct PolyCore {
    UniPoly<K> gcd;  // monic (zero only when both inputs are zero)
    K resultant;
};

/// Monic gcd and resultant in one pass, via the subresultant PRS
/// (division-deferred remainders; the resultant is recovered from the same
/// sequence with exact scalar corrections).
/// Conventions: gcd(0,0) = 0; resultant is 0 whenever an input is zero or the
/// gcd is nonconstant; the resultant of two nonzero constants is 1.
template <class K>
PolyCore<K> poly_core(const UniPoly<K>& p, const UniPoly<K>& q) {
    if (p.is_zero() && q.is_zero()) return {UniPoly<K>(), K(0)};
    if (p.is_zero()) return {q.monic(), K(0)};
    if (q.is_zero()) return {p.monic(), K(0)};

    UniPoly<K> A = p, B = q;
    K acc(1);
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((p.degree() & 1) && (q.degree() & 1)) acc = -acc;
    }
    K g(1), h(1);
    while (B.degree() > 0) {
        const int dA = A.degree(), dB = B.degree();
        const long delta = dA - dB;
        UniPoly<K> R = poly_prem(A, B);
        if (R.is_zero()) return {B.monic(), K(0)};
        // Res(A,B) = (-1)^(dA*dB) * lc(B)^(dA - deg r) * Res(B, r) with
        // r = R / lc(B)^(delta+1); the stored remainder is B' = R/(g*h^delta),
        // so Res(B, r) = (g*h^delta / lc(B)^(delta+1))^dB * Res(B, B').
        const K scale = g * field_pow(h, delta);
        const K u = scale / field_pow(B.lc(), delta + 1);
        K step = field_pow(B.lc(), dA - R.degree()) * field_pow(u, dB);
        if ((dA & 1) && (dB & 1)) step = -step;
        acc = acc * step;
        A = B;
        B = R / scale;
        g = A.lc();
        h = delta == 0 ? h : field_pow(g, delta) / field_pow(h, delta - 1);
    }
    // B is a nonzero constant: Res(A, B) = lc(B)^deg(A), gcd is 1.
    return {UniPoly<K>(K(1)), acc * field_pow(B.lc(), A.degree())};
}

template <class K>
UniPoly<K> poly_gcd(const UniPoly<K>& p, const UniPoly<K>& q) {
    return poly_core(p, q).gcd;
}

template <class K>
K poly_resultant(const UniPoly<K>& p, const UniPoly<K>& q) {
    return poly_core(p, q).resultant;
}

/// lcm, normalized monic.
template <class K>
UniPoly<K> poly_lcm(const UniPoly<K>& p, const UniPoly<K>& q) {
    if (p.is_zero() || q.is_zero()) return UniPoly<K>();
    return poly_divexact(p * q, poly_gcd(p, q)).monic();
}

using QPoly = UniPoly<Rational>;

/// content(p) = signed rational c with p = c * pp(p), pp primitive integer
/// with positive leading coefficient. content(0) = 0.
inline Rational poly_content(const QPoly& p) {
    if (p.is_zero()) return Rational(0);
    Int num_gcd(0), den_lcm(1);
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        num_gcd = gcd(num_gcd, c.numerator());
        den_lcm = lcm(den_lcm, c.denominator());
    }
    Rational c(num_gcd, den_lcm);
    if (p.lc().is_negative()) c = -c;
    return c;
}

struct IntegerNormal {
    QPoly primitive;  // integer coefficients, content 1, positive leading coefficient
    Rational unit;    // input = unit * primitive
};

inline IntegerNormal integer_normalize(const QPoly& p) {
    if (p.is_zero()) return {QPoly(), Rational(1)};
    Rational c = poly_content(p);
    return {p / c, c};
}

/// All integer roots of a nonzero rational-coefficient polynomial, sorted.
inline std::vector<Int> integer_roots_q(const QPoly& p) {
    if (p.is_zero()) throw std::domain_error("integer_roots: zero polynomial");
    QPoly f = integer_normalize(p).primitive;
    std::vector<Int> roots;
    // Strip the power of x: 0 is a root iff the trailing coefficient vanishes.
    int v = 0;
    while (f.coeff(v).is_zero()) ++v;
    if (v > 0) {
        roots.push_back(0);
        std::vector<Rational> shifted(f.coeffs().begin() + v, f.coeffs().end());
        f = QPoly(std::move(shifted));
    }
    if (f.degree() <= 0) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    const Int trailing = telescope::abs(f.coeff(0)).to_int();
    // Cauchy bound: any root r has |r| <= 1 + max |c_i| / |lc|.
    Rational maxc(0);
    for (const auto& c : f.coeffs())
        if (telescope::abs(c) > maxc) maxc = telescope::abs(c);
    const Rational cauchy = Rational(1) + maxc / telescope::abs(f.lc());
    const Int bound = cauchy.numerator() / cauchy.denominator() + 1;
    // Divisors of the trailing coefficient, capped by the root bound.
    std::vector<std::pair<Int, int>> primes;
    Int m = trailing;
    for (Int d = 2; d * d <= m && d < 2'000'000; ++d) {
        if (m % d == 0) {
            int e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            primes.emplace_back(d, e);
        }
    }
    if (m > 1) primes.emplace_back(m, 1);
    std::vector<Int> divisors{1};
    for (const auto& [pr, e] : primes) {
        std::size_t n = divisors.size();
        Int pe(1);
        for (int i = 0; i < e; ++i) {
            pe *= pr;
            for (std::size_t j = 0; j < n; ++j) {
                Int d = divisors[j] * pe;
                if (d <= bound) divisors.push_back(d);
            }
        }
    }
    for (const auto& d : divisors) {
        const Int nd = -d;
        if (f(Rational(d)).is_zero()) roots.push_back(d);
        if (f(Rational(nd)).is_zero()) roots.push_back(nd);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

inline std::vector<Int> integer_roots(const QPoly& p) { return integer_roots_q(p); }

/// The integer value of a scalar, when it is one.
inline std::optional<long> as_integer(const Rational& x) {
    if (!x.is_integer() || !x.numerator().fits_slong_p()) return std::nullopt;
    return x.to_long();
}

/// Expanded deterministic rendering, highest degree first: "4*n^2 - 27*n + 1".
inline std::string poly_str(const QPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeff(i);
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (out.empty()) {
            if (c.is_negative()) out += "-";
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        bool unit = a.is_one();
        if (!unit || i == 0) out += a.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace telescope
