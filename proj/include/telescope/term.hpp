#pragma once

#include "telescope/ore.hpp"
#include "telescope/tower.hpp"

#include <optional>
#include <string>
#include <vector>

namespace telescope {

/// Integer-linear form a*n + b*k + e.
struct LinForm {
    long n = 0, k = 0, c = 0;

    long eval(long n0, long k0) const { return n * n0 + k * k0 + c; }
    LinForm shifted_n(long d) const { return {n, k, c + n * d}; }
    LinForm shifted_k(long d) const { return {n, k, c + k * d}; }
    long coef(bool in_n) const { return in_n ? n : k; }
    bool operator==(const LinForm&) const = default;
    std::string str() const;
};

enum class Location { Numerator, Denominator };
enum class Var { N, K };

struct PowerFactor {
    Rational base;  // nonzero
    LinForm expo;
    bool operator==(const PowerFactor&) const = default;
};

struct BinomFactor {
    LinForm top, bottom;
    Location loc = Location::Numerator;
    int mult = 1;
    bool same_shape(const BinomFactor& o) const {
        return top == o.top && bottom == o.bottom && loc == o.loc;
    }
};

struct FactFactor {
    LinForm arg;
    Location loc = Location::Numerator;
    int mult = 1;
    bool same_shape(const FactFactor& o) const { return arg == o.arg && loc == o.loc; }
};

/// k = slope*m + offset, parametrized by the shifted index m = n + i.
struct LinLine {
    long slope = 0, offset = 0;
    long at(long m) const { return slope * m + offset; }
};

/// Certified vanishing of F(m,k): below zero (lower) and on a window above
/// each shift's support, edge(m) < k <= cap(m) (cap absent means unbounded).
struct VanishWindow {
    LinLine edge;
    std::optional<LinLine> cap;
};

struct VanishInfo {
    bool lower_natural = false;
    std::optional<VanishWindow> upper;
};

/// Structured proper hypergeometric term
///   F(n,k) = constant * Π base^(a n + b k + e) * Π binomial^±1 * Π (...)!^±1 * poly(n,k).
class ProperTerm {
public:
    ProperTerm() : polyfactor_(QFunc(1)) {}

    ProperTerm& set_constant(const Rational& c);
    ProperTerm& mul_power(const Rational& base, const LinForm& expo);
    ProperTerm& mul_binomial(const LinForm& top, const LinForm& bottom,
                             Location loc = Location::Numerator);
    ProperTerm& mul_factorial(const LinForm& arg, Location loc = Location::Numerator);
    ProperTerm& mul_poly(const KPoly& p);

    const Rational& constant() const { return constant_; }
    const std::vector<PowerFactor>& powers() const { return powers_; }
    const std::vector<BinomFactor>& binomials() const { return binomials_; }
    const std::vector<FactFactor>& factorials() const { return factorials_; }
    const KPoly& polyfactor() const { return polyfactor_; }

    /// Exact value with the generalized binomial convention
    /// C(m,r) = m(m-1)...(m-r+1)/r! for integer r >= 0, C(m,r) = 0 for r < 0.
    /// nullopt ("undefined") for negative factorial arguments or a vanishing
    /// denominator factor.
    std::optional<Rational> eval(long n0, long k0) const;

    /// F(.., var+1) / F(.., var) as a reduced element of Q(n,k).
    KFunc shift_quotient(Var var) const;

    /// Vanishing certificates valid for every shift m = n..n+J (the
    /// certificates are uniform in the shift, so J only bounds their use).
    VanishInfo support_analysis(long max_shift) const;

    /// g(n) = F(n, beta*n + gamma) as a hypergeometric sequence, defined from
    /// `base` on. An optional multiplier M(n,k) folds a certificate into the
    /// specialized sequence: g(n) = M(n, beta*n+gamma) * F(n, beta*n+gamma).
    HyperTermN specialize_line(long beta, long gamma, long base = 0,
                               const KFunc* multiplier = nullptr) const;

    std::string str() const;

private:
    Rational constant_ = Rational(1);
    std::vector<PowerFactor> powers_;
    std::vector<BinomFactor> binomials_;
    std::vector<FactFactor> factorials_;
    KPoly polyfactor_;
};

/// Generalized binomial via the falling-factorial product formula.
Rational binomial_value(const Rational& top, long bottom);
Rational factorial_value(long arg);

/// Integrand F(n,x) = c(x) * f(x)^n with rational prefactor and polynomial base.
struct HyperexpTerm {
    QFunc prefactor;  // c(x)
    QPoly base;       // f(x), nonzero

    /// F(n0, x0); nullopt when the prefactor has a pole at x0.
    std::optional<Rational> eval(long n0, const Rational& x0) const;
    std::string str() const;
};

}  // namespace telescope
