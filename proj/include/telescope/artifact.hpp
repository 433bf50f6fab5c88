#pragma once

#include "telescope/oracle.hpp"
#include "telescope/reader.hpp"
#include "telescope/zeilberger.hpp"

#include <string>

namespace telescope {

inline constexpr const char* kToolVersion = "telescope 0.1.0";
inline constexpr const char* kArtifactSchema = "telescope-artifact/1";

struct VerificationReport {
    bool certificate_ok = false;
    long oracle_lo = 0, oracle_hi = 0;
    bool oracle_ok = false;
    bool ok() const { return certificate_ok && oracle_ok; }
};

/// Self-contained proof object: an independent checker re-verifies from the
/// strings alone (input, operator, certificate, rhs).
struct ProofArtifact {
    std::string schema = kArtifactSchema;
    std::string input;
    std::string kind;  // "sum" | "integral"
    SumRange range;    // kind == "sum"
    Rational bound_a, bound_b;  // kind == "integral"
    std::string op_canonical;
    std::string op_paper;
    ClosedForm rhs;
    std::string certificate;
    VerificationReport report;
    std::string version = kToolVersion;
    double timing_ms = 0.0;
};

struct DiscoveryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Discover, verify, and package. Throws ParseError / domain_error on bad
/// input, DiscoveryError when no operator of order <= max_order exists.
/// A failed verification is flagged in the report, not thrown.
ProofArtifact prove_sum(const std::string& term_text, const SumRange& range, int max_order = 6);
ProofArtifact prove_integral(const std::string& term_text, const Rational& a, const Rational& b,
                             int max_order = 6);

std::string artifact_to_json(const ProofArtifact& a);
ProofArtifact artifact_from_json(const std::string& text);

/// Re-verification from the artifact strings only (no discovery code).
VerificationReport recheck(const ProofArtifact& a);

std::string closed_form_to_json(const ClosedForm& f);
ClosedForm closed_form_from_json(const std::string& text);

}  // namespace telescope
