#pragma once

#include "telescope/tower.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace telescope {

/// Element of the shift algebra Q(n)<N>, N*a(n) = a(n+1)*N, with polynomial
/// coefficients: coeffs[i] multiplies N^i. Arithmetic is exact and does not
/// renormalize; `canonical()` produces the comparison form (integer
/// coefficients, content 1, positive leading coefficient on the top term).
class OreOp {
public:
    OreOp() = default;
    explicit OreOp(std::vector<QPoly> coeffs);
    OreOp(std::initializer_list<QPoly> coeffs) : OreOp(std::vector<QPoly>(coeffs)) {}

    static OreOp shift();     // N
    static OreOp identity();  // 1

    int order() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const QPoly& coeff(int i) const;
    const std::vector<QPoly>& coeffs() const { return c_; }

    OreOp operator+(const OreOp& o) const;
    OreOp operator-(const OreOp& o) const;
    OreOp operator-() const;
    OreOp scaled(const QPoly& s) const;  // left multiplication by a polynomial

    bool operator==(const OreOp& o) const { return c_ == o.c_; }
    bool operator!=(const OreOp& o) const { return !(*this == o); }

    OreOp canonical() const;

    std::string str() const;  // canonical text format "(c_r)*N^r + ... + (c_0)"

private:
    void trim();
    std::vector<QPoly> c_;
};

/// Noncommutative product: (A∘B)f = A(Bf).
OreOp ore_mul(const OreOp& a, const OreOp& b);

bool equal_up_to_unit(const OreOp& a, const OreOp& b);

/// Greatest common right divisor via the right Euclidean algorithm,
/// canonicalized to primitive integer coefficients.
OreOp gcrd(const OreOp& a, const OreOp& b);

/// Σ a_i(n) * values(n+i). Throws "missing-values" when a value is absent.
Rational ore_apply(const OreOp& a, const std::function<std::optional<Rational>(long)>& values,
                   long n);

/// Hypergeometric sequence in n: value(m+1) = quotient(m) * value(m) for
/// m >= start, with explicit values for finitely many indices below start.
struct HyperTermN {
    long start = 0;
    Rational start_value;
    QFunc quotient = QFunc(1);
    std::map<long, Rational> prefix;  // indices below start

    /// Defined for n >= start and for listed prefix indices.
    std::optional<Rational> eval(long n) const;
    long first_defined() const;
    bool is_identically_zero() const;
    HyperTermN negated() const;
};

/// Builds a term defined from `base` on: the start index is raised past every
/// integer root of the quotient denominator, with the skipped values recorded
/// explicitly from `value_at`.
HyperTermN make_hyper_seq(long base, const QFunc& quotient,
                          const std::function<Rational(long)>& value_at);

/// Finite sum of hypergeometric sequences; the empty list is zero.
struct ClosedForm {
    std::vector<HyperTermN> terms;

    static ClosedForm zero() { return {}; }
    static ClosedForm constant(const Rational& c);
    bool is_zero() const { return terms.empty(); }

    std::optional<Rational> eval(long n) const;
    ClosedForm negated() const;
};

/// Sound decision procedure for A = B as sequences (on the common domain):
/// the difference is annihilated by an explicitly built product of first-order
/// operators; equality follows from enough direct evaluations, including one
/// past every integer root of the product's leading coefficient and every
/// prefix exception.
bool closed_form_equal(const ClosedForm& a, const ClosedForm& b);

/// Annihilator of L·f = rhs: H = (N - q)∘L with q the rhs quotient,
/// denominator-cleared and canonicalized. Throws "zero-rhs" on a zero rhs.
OreOp homogenize(const OreOp& op, const HyperTermN& rhs);

/// Clears a rational-function coefficient vector to the canonical integer
/// operator; unit satisfies op.coeff(i) = unit * sigma[i].
struct SigmaNormal {
    OreOp op;
    QFunc unit;
};
SigmaNormal clear_and_canonicalize(const std::vector<QFunc>& sigma);

}  // namespace telescope
