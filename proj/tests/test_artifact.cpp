#include "doctest.h"

#include "telescope/artifact.hpp"

#include <regex>

using namespace telescope;

namespace {

std::string strip_timing(std::string json) {
    return std::regex_replace(json, std::regex("\"timing_ms\": [0-9.e+-]+"), "\"timing_ms\": X");
}

}  // namespace

TEST_CASE("sum artifact: build, serialize, re-verify") {
    ProofArtifact a = prove_sum("3^j*binomial(3*n-j,2*n)", SumRange{0, 1, 0});
    CHECK(a.report.ok());
    CHECK(a.op_canonical == "(4)*N^1 + (-27)*N^0");

    std::string json = artifact_to_json(a);
    ProofArtifact b = artifact_from_json(json);
    CHECK(b.input == a.input);
    CHECK(b.op_canonical == a.op_canonical);
    CHECK(b.certificate == a.certificate);
    CHECK(closed_form_equal(b.rhs, a.rhs));

    VerificationReport r = recheck(b);
    CHECK(r.certificate_ok);
    CHECK(r.oracle_ok);
}

TEST_CASE("integral artifact: build, serialize, re-verify") {
    ProofArtifact a = prove_integral("2*(3*x^2-2*x^3)^n", Rational(0), Rational(1));
    CHECK(a.report.ok());
    CHECK(a.op_paper == "[9*(n + 1)*(2*n + 1) - 2*(3*n + 4)*(3*n + 2)*N, 2]");
    ProofArtifact b = artifact_from_json(artifact_to_json(a));
    VerificationReport r = recheck(b);
    CHECK(r.certificate_ok);
    CHECK(r.oracle_ok);
}

TEST_CASE("a tampered certificate fails re-verification") {
    ProofArtifact a = prove_sum("binomial(n,k)", SumRange{0, 1, 0});
    CHECK(a.report.ok());
    a.certificate = "(" + a.certificate + ") + 1";
    VerificationReport r = recheck(a);
    CHECK_FALSE(r.certificate_ok);
}

TEST_CASE("a tampered right-hand side fails the oracle window") {
    ProofArtifact a = prove_sum("3^j*binomial(3*n-j,2*n)", SumRange{0, 1, 0});
    REQUIRE_FALSE(a.rhs.terms.empty());
    a.rhs.terms[0].start_value += Rational(1);
    VerificationReport r = recheck(a);
    CHECK(r.certificate_ok);  // the certificate itself is untouched
    CHECK_FALSE(r.oracle_ok);
}

TEST_CASE("artifacts are deterministic up to the timing field") {
    ProofArtifact a = prove_sum("(-3)^j*binomial(3*n-j,n)", SumRange{0, 2, 0});
    ProofArtifact b = prove_sum("(-3)^j*binomial(3*n-j,n)", SumRange{0, 2, 0});
    CHECK(strip_timing(artifact_to_json(a)) == strip_timing(artifact_to_json(b)));
}

TEST_CASE("discovery failure is reported distinctly") {
    CHECK_THROWS_AS(prove_sum("3^j*binomial(3*n-j,2*n)", SumRange{0, 1, 0}, 0), DiscoveryError);
}

TEST_CASE("closed form JSON round-trip") {
    ProofArtifact a = prove_sum("2^j*binomial(3*n+1,n-j)", SumRange{0, 1, 0});
    ClosedForm back = closed_form_from_json(closed_form_to_json(a.rhs));
    CHECK(closed_form_equal(back, a.rhs));
    for (long n = 0; n <= 10; ++n) CHECK(*back.eval(n) == *a.rhs.eval(n));
}
