#pragma once

#include "telescope/gosper.hpp"
#include "telescope/ore.hpp"
#include "telescope/term.hpp"

#include <optional>

namespace telescope {

/// Summation range lower .. slope*n + offset.
struct SumRange {
    long lower = 0;
    long slope = 1, offset = 0;
    long upper_at(long n) const { return slope * n + offset; }
};

/// Telescoping proof object: L = Σ sigma_i(n) N^i (canonical integer form)
/// and the rational certificate R(n,k) with
///   Σ sigma_i(n) F(n+i,k)/F(n,k) = R(n,k+1) q(n,k) - R(n,k),  q = F(n,k+1)/F(n,k).
struct CTPair {
    OreOp op;
    KFunc cert;
};

/// Zeilberger's algorithm: the minimal-order creative-telescoping pair with
/// order <= max_order, or nullopt ("no-operator-found").
std::optional<CTPair> zeilberger(const ProperTerm& term, int max_order = 6);

/// Exact check of the certificate identity, cleared of denominators.
bool verify_ct(const ProperTerm& term, const CTPair& pair);

/// Converts range/boundary information into the inhomogeneous right-hand side
/// RHS(n) with L·S(n) = RHS(n) for S(n) = Σ_{k=lower}^{b(n)} F(n,k), n >= 0.
/// Throws "unsupported-range" when no certified extension line exists.
ClosedForm boundary_rhs(const ProperTerm& term, const CTPair& pair, const SumRange& range);

/// Σ_{k=lower}^{b(n)} F(n,k) by direct evaluation.
Rational direct_sum(const ProperTerm& term, const SumRange& range, long n);

}  // namespace telescope
