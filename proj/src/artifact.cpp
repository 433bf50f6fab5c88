#include "telescope/artifact.hpp"

#include "telescope/azint.hpp"

#include <json.hpp>

#include <chrono>
#include <variant>

namespace telescope {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json poly_to_json(const QPoly& p) {
    ordered_json a = ordered_json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

QPoly poly_from_json(const ordered_json& a) {
    std::vector<Rational> v;
    for (const auto& c : a) v.push_back(Rational::parse(c.get<std::string>()));
    return QPoly(std::move(v));
}

ordered_json term_to_json(const HyperTermN& t) {
    ordered_json j;
    j["start"] = t.start;
    j["value"] = t.start_value.str();
    j["quotient"] = {{"num", poly_to_json(t.quotient.num())},
                     {"den", poly_to_json(t.quotient.den())}};
    ordered_json prefix = ordered_json::array();
    for (const auto& [n, v] : t.prefix) prefix.push_back({n, v.str()});
    j["prefix"] = prefix;
    return j;
}

HyperTermN term_from_json(const ordered_json& j) {
    HyperTermN t;
    t.start = j.at("start").get<long>();
    t.start_value = Rational::parse(j.at("value").get<std::string>());
    t.quotient = QFunc(poly_from_json(j.at("quotient").at("num")),
                       poly_from_json(j.at("quotient").at("den")));
    for (const auto& e : j.at("prefix"))
        t.prefix.emplace(e.at(0).get<long>(), Rational::parse(e.at(1).get<std::string>()));
    return t;
}

ordered_json form_to_json(const ClosedForm& f) {
    ordered_json terms = ordered_json::array();
    for (const auto& t : f.terms) terms.push_back(term_to_json(t));
    return ordered_json{{"terms", terms}};
}

ClosedForm form_from_json(const ordered_json& j) {
    ClosedForm f;
    for (const auto& t : j.at("terms")) f.terms.push_back(term_from_json(t));
    return f;
}

ordered_json report_to_json(const VerificationReport& r) {
    return ordered_json{{"certificate_ok", r.certificate_ok},
                        {"oracle_window", {r.oracle_lo, r.oracle_hi}},
                        {"oracle_ok", r.oracle_ok}};
}

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

VerificationReport verify_sum_artifact(const ProperTerm& term, const OreOp& op, const KFunc& cert,
                                       const ClosedForm& rhs, const SumRange& range) {
    VerificationReport r;
    r.certificate_ok = verify_ct(term, CTPair{op, cert});
    r.oracle_lo = 0;
    r.oracle_hi = 30;
    auto values = [&](long n) -> std::optional<Rational> {
        return direct_sum(term, range, n);
    };
    r.oracle_ok = check_recurrence(values, op, rhs, r.oracle_lo, r.oracle_hi);
    return r;
}

VerificationReport verify_int_artifact(const HyperexpTerm& term, const OreOp& op,
                                       const KFunc& cert, const ClosedForm& rhs,
                                       const Rational& a, const Rational& b) {
    VerificationReport r;
    r.certificate_ok = verify_az(term, ContCTPair{op, cert});
    if (!term.prefactor.is_constant()) {
        // the polynomial-integration oracle covers constant prefactors only
        r.oracle_lo = 0;
        r.oracle_hi = -1;
        r.oracle_ok = true;
        return r;
    }
    r.oracle_lo = 0;
    r.oracle_hi = 20;
    PolyIntegralSpec spec{term.prefactor.constant_value(), term.base, a, b};
    auto values = [&](long n) -> std::optional<Rational> {
        return eval_integral(spec, n, IntegralStrategy::Expand);
    };
    r.oracle_ok = check_recurrence(values, op, rhs, r.oracle_lo, r.oracle_hi);
    return r;
}

}  // namespace

ProofArtifact prove_sum(const std::string& term_text, const SumRange& range, int max_order) {
    const double t0 = now_ms();
    auto parsed = parse_term(term_text);
    if (!std::holds_alternative<ProperTerm>(parsed))
        throw std::domain_error("not-proper: expected a summand in (n,k)");
    const ProperTerm& term = std::get<ProperTerm>(parsed);
    auto pair = zeilberger(term, max_order);
    if (!pair) throw DiscoveryError("no-operator-found");
    ClosedForm rhs = boundary_rhs(term, *pair, range);

    ProofArtifact a;
    a.input = term_text;
    a.kind = "sum";
    a.range = range;
    a.op_canonical = print_operator(pair->op, rhs, OpStyle::Canonical);
    a.op_paper = print_operator(pair->op, rhs, OpStyle::Paper);
    a.rhs = rhs;
    a.certificate = print_ratfunc(pair->cert, "k");
    a.report = verify_sum_artifact(term, pair->op, pair->cert, rhs, range);
    a.timing_ms = now_ms() - t0;
    return a;
}

ProofArtifact prove_integral(const std::string& term_text, const Rational& lo, const Rational& hi,
                             int max_order) {
    const double t0 = now_ms();
    auto parsed = parse_term(term_text);
    if (!std::holds_alternative<HyperexpTerm>(parsed))
        throw std::domain_error("not-hyperexponential: expected an integrand in x");
    const HyperexpTerm& term = std::get<HyperexpTerm>(parsed);
    auto pair = az(term, max_order);
    if (!pair) throw DiscoveryError("no-operator-found");
    ClosedForm rhs = az_definite(term, *pair, lo, hi);

    ProofArtifact a;
    a.input = term_text;
    a.kind = "integral";
    a.bound_a = lo;
    a.bound_b = hi;
    a.op_canonical = print_operator(pair->op, rhs, OpStyle::Canonical);
    a.op_paper = print_operator(pair->op, rhs, OpStyle::Paper);
    a.rhs = rhs;
    a.certificate = print_ratfunc(pair->cert, "x");
    a.report = verify_int_artifact(term, pair->op, pair->cert, rhs, lo, hi);
    a.timing_ms = now_ms() - t0;
    return a;
}

std::string artifact_to_json(const ProofArtifact& a) {
    ordered_json j;
    j["schema"] = a.schema;
    j["input"] = a.input;
    j["kind"] = a.kind;
    if (a.kind == "sum") {
        j["range"] = {{"lower", a.range.lower},
                      {"upper_slope", a.range.slope},
                      {"upper_offset", a.range.offset}};
    } else {
        j["bounds"] = {a.bound_a.str(), a.bound_b.str()};
    }
    j["operator"] = {{"canonical", a.op_canonical}, {"paper", a.op_paper}};
    j["rhs"] = form_to_json(a.rhs);
    j["certificate"] = a.certificate;
    j["verification"] = report_to_json(a.report);
    j["version"] = a.version;
    j["timing_ms"] = a.timing_ms;
    return j.dump(2) + "\n";
}

ProofArtifact artifact_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    ProofArtifact a;
    a.schema = j.at("schema").get<std::string>();
    if (a.schema != kArtifactSchema)
        throw std::domain_error("artifact: unknown schema " + a.schema);
    a.input = j.at("input").get<std::string>();
    a.kind = j.at("kind").get<std::string>();
    if (a.kind == "sum") {
        a.range.lower = j.at("range").at("lower").get<long>();
        a.range.slope = j.at("range").at("upper_slope").get<long>();
        a.range.offset = j.at("range").at("upper_offset").get<long>();
    } else if (a.kind == "integral") {
        a.bound_a = Rational::parse(j.at("bounds").at(0).get<std::string>());
        a.bound_b = Rational::parse(j.at("bounds").at(1).get<std::string>());
    } else {
        throw std::domain_error("artifact: unknown kind " + a.kind);
    }
    a.op_canonical = j.at("operator").at("canonical").get<std::string>();
    a.op_paper = j.at("operator").at("paper").get<std::string>();
    a.rhs = form_from_json(j.at("rhs"));
    a.certificate = j.at("certificate").get<std::string>();
    a.version = j.at("version").get<std::string>();
    a.timing_ms = j.at("timing_ms").get<double>();
    const auto& v = j.at("verification");
    a.report.certificate_ok = v.at("certificate_ok").get<bool>();
    a.report.oracle_lo = v.at("oracle_window").at(0).get<long>();
    a.report.oracle_hi = v.at("oracle_window").at(1).get<long>();
    a.report.oracle_ok = v.at("oracle_ok").get<bool>();
    return a;
}

VerificationReport recheck(const ProofArtifact& a) {
    OreOp op = parse_operator(a.op_canonical);
    if (a.kind == "sum") {
        auto parsed = parse_term(a.input);
        const ProperTerm& term = std::get<ProperTerm>(parsed);
        KFunc cert = parse_ratfunc(a.certificate, "k");
        return verify_sum_artifact(term, op, cert, a.rhs, a.range);
    }
    auto parsed = parse_term(a.input);
    const HyperexpTerm& term = std::get<HyperexpTerm>(parsed);
    KFunc cert = parse_ratfunc(a.certificate, "x");
    return verify_int_artifact(term, op, cert, a.rhs, a.bound_a, a.bound_b);
}

std::string closed_form_to_json(const ClosedForm& f) { return form_to_json(f).dump(2); }

ClosedForm closed_form_from_json(const std::string& text) {
    return form_from_json(ordered_json::parse(text));
}

}  // namespace telescope
