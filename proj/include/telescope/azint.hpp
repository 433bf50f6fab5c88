#pragma once

#include "telescope/ore.hpp"
#include "telescope/term.hpp"

#include <optional>

namespace telescope {

/// Continuous creative-telescoping pair for F(n,x) = c(x) f(x)^n:
///   Σ sigma_j(n) f(x)^j = R'(n,x) + R(n,x) (c'/c + n f'/f)
/// with R rational in x over Q(n) (stored in the same tower as Q(n,k)).
struct ContCTPair {
    OreOp op;
    KFunc cert;
};

/// Almkvist-Zeilberger: minimal order <= max_order, or nullopt
/// ("no-operator-found"). Certificate ansatz R = X(x) / (f(x)^m den(c)) with
/// m = order and bounded escalation of deg X.
std::optional<ContCTPair> az(const HyperexpTerm& term, int max_order = 6);

/// Exact check of the continuous certificate identity.
bool verify_az(const HyperexpTerm& term, const ContCTPair& pair);

/// Boundary evaluation: RHS(n) = R(n,b) c(b) f(b)^n - R(n,a) c(a) f(a)^n, so
/// that L·I(n) = RHS(n) for I(n) = ∫_a^b c(x) f(x)^n dx.
/// Throws "pole-at-endpoint" / "pole-at-integer".
ClosedForm az_definite(const HyperexpTerm& term, const ContCTPair& pair, const Rational& a,
                       const Rational& b);

}  // namespace telescope
