#pragma once

#include "telescope/ore.hpp"
#include "telescope/term.hpp"
#include "telescope/zeilberger.hpp"

namespace telescope {

struct SumSpec {
    ProperTerm term;
    SumRange range;
};

/// scale * ∫_a^b f(x)^n dx with polynomial f.
struct PolyIntegralSpec {
    Rational scale;
    QPoly base;
    Rational a, b;
};

enum class IntegralStrategy { Expand, Binomial };

/// Exact Σ over the concrete range, term by term.
Rational eval_sum(const SumSpec& spec, long n);

/// Exact integral. Expand raises f to the n-th power and integrates
/// monomials; Binomial applies the binomial theorem to the linear factor of
/// f = x^2 (c0 + c1 x) and integrates term by term (throws
/// "strategy-unavailable" for any other base shape).
Rational eval_integral(const PolyIntegralSpec& spec, long n, IntegralStrategy strategy);

/// apply(L, values, n) = rhs(n) exactly for every n in [n_lo, n_hi].
bool check_recurrence(const std::function<std::optional<Rational>(long)>& values, const OreOp& op,
                      const ClosedForm& rhs, long n_lo, long n_hi);

}  // namespace telescope
