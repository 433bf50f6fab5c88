#pragma once

#include "telescope/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace telescope {

/// Reduced rational function num/den over a field K: gcd(num, den) = 1, den monic.
template <class K>
class RatFunc {
public:
    RatFunc() : num_(), den_(K(1)) {}
    RatFunc(const K& c) : num_(c), den_(K(1)) {}
    RatFunc(long c) : num_(K(c)), den_(K(1)) {}
    RatFunc(const UniPoly<K>& p) : num_(p), den_(K(1)) {}
    RatFunc(UniPoly<K> num, UniPoly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        normalize();
    }
    static RatFunc var() { return RatFunc(UniPoly<K>::var()); }

    const UniPoly<K>& num() const { return num_; }
    const UniPoly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    K constant_value() const {
        if (!is_constant()) throw std::domain_error("RatFunc: not constant");
        return num_.coeff(0);
    }

    RatFunc operator-() const { return RatFunc(-num_, den_, 0); }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    RatFunc pow(long e) const {
        if (e >= 0) return RatFunc(num_.pow(e), den_.pow(e));
        if (is_zero()) throw std::domain_error("RatFunc: negative power of zero");
        return RatFunc(den_.pow(-e), num_.pow(-e));
    }

    /// Value at a point of K; nullopt when the denominator vanishes there.
    std::optional<K> eval(const K& x) const {
        K d = den_(x);
        if (d.is_zero()) return std::nullopt;
        return num_(x) / d;
    }

    /// Substitution of a rational function of a (possibly larger) field.
    template <class A>
    A substitute(const A& x) const {
        A n = num_.template eval<A>(x), d = den_.template eval<A>(x);
        if (d.is_zero()) throw std::domain_error("RatFunc: substitution hits a pole");
        return n / d;
    }

    /// r(t + a) for integer a (coefficients untouched).
    RatFunc shift_arg(long a) const {
        if (a == 0) return *this;
        return RatFunc(num_.shift(a), den_.shift(a), 0);
    }

private:
    RatFunc(UniPoly<K> num, UniPoly<K> den, int) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize() {
        if (num_.is_zero()) {
            den_ = UniPoly<K>(K(1));
            return;
        }
        auto g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
        const K l = den_.lc();
        if (!l.is_one()) {
            num_ = num_ / l;
            den_ = den_ / l;
        }
    }
    UniPoly<K> num_, den_;
};

}  // namespace telescope
