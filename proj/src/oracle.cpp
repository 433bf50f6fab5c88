#include "telescope/oracle.hpp"

#include <stdexcept>

namespace telescope {

Rational eval_sum(const SumSpec& spec, long n) {
    if (n < 0) throw std::domain_error("eval_sum: negative index");
    return direct_sum(spec.term, spec.range, n);
}

namespace {

Rational integrate_monomials(const QPoly& p, const Rational& a, const Rational& b) {
    Rational acc(0);
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i).is_zero()) continue;
        Rational c = p.coeff(i) / Rational(i + 1);
        acc += c * (b.pow(i + 1) - a.pow(i + 1));
    }
    return acc;
}

}  // namespace

Rational eval_integral(const PolyIntegralSpec& spec, long n, IntegralStrategy strategy) {
    if (n < 0) throw std::domain_error("eval_integral: negative index");
    if (strategy == IntegralStrategy::Expand)
        return spec.scale * integrate_monomials(spec.base.pow(n), spec.a, spec.b);
    // f = x^2 (c0 + c1 x) exactly: f^n = x^(2n) Σ_j C(n,j) c0^(n-j) c1^j x^j.
    const bool shape = spec.base.degree() == 3 && spec.base.coeff(0).is_zero() &&
                       spec.base.coeff(1).is_zero();
    if (!shape) throw std::domain_error("strategy-unavailable");
    const Rational c0 = spec.base.coeff(2), c1 = spec.base.coeff(3);
    Rational acc(0);
    for (long j = 0; j <= n; ++j) {
        Rational coef = binomial_value(Rational(n), j) * c0.pow(n - j) * c1.pow(j);
        long e = 2 * n + j + 1;
        acc += coef * (spec.b.pow(e) - spec.a.pow(e)) / Rational(e);
    }
    return spec.scale * acc;
}

bool check_recurrence(const std::function<std::optional<Rational>(long)>& values, const OreOp& op,
                      const ClosedForm& rhs, long n_lo, long n_hi) {
    for (long n = n_lo; n <= n_hi; ++n) {
        auto r = rhs.eval(n);
        if (!r || ore_apply(op, values, n) != *r) return false;
    }
    return true;
}

}  // namespace telescope
