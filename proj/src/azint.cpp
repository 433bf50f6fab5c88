#include "telescope/azint.hpp"

#include "telescope/linsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace telescope {

namespace {

KPoly embed(const QPoly& p) { return kpoly_from_k(p); }

// Derivative in x of a polynomial in x with Q(n) coefficients.
KPoly dx(const KPoly& p) { return p.derivative(); }

}  // namespace

std::optional<ContCTPair> az(const HyperexpTerm& term, int max_order) {
    if (term.base.is_zero()) throw std::invalid_argument("az: zero base");
    const KPoly f = embed(term.base);
    const KPoly fp = dx(f);
    const KPoly cn = embed(term.prefactor.num());
    const KPoly cd = embed(term.prefactor.den());

    for (int J = 0; J <= max_order; ++J) {
        const long m = J;
        // Σ_j sigma_j f^(j+m+1) cn cd^2
        //   = f cn cd X' + X (cn' f cd - 2 cd' f cn + (n-m) f' cn cd).
        const QFunc n_minus_m(QPoly(std::vector<Rational>{Rational(-m), Rational(1)}));
        const KPoly W = dx(cn) * f * cd - dx(cd) * f * cn * QFunc(2) + fp * cn * cd * n_minus_m;
        const KPoly U = f * cn * cd;
        const long d_base = static_cast<long>(term.base.degree()) * (J + 1);
        for (long d = d_base; d <= d_base + 8; ++d) {
            std::vector<KPoly> cols;
            KPoly xi(QFunc(1));  // x^i
            for (long i = 0; i <= d; ++i) {
                cols.push_back(-(U * dx(xi) + xi * W));
                xi *= KPoly::var();
            }
            const std::size_t nx = cols.size();
            KPoly fpow = f.pow(m + 1) * cn * cd * cd;
            for (int j = 0; j <= J; ++j) {
                cols.push_back(fpow);
                fpow *= f;
            }
            int maxdeg = 0;
            for (const auto& col : cols) maxdeg = std::max(maxdeg, col.degree());
            const std::size_t rows = static_cast<std::size_t>(maxdeg) + 1;
            std::vector<std::vector<QFunc>> M(rows, std::vector<QFunc>(cols.size(), QFunc(0)));
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (std::size_t t = 0; t < rows; ++t) M[t][j] = cols[j].coeff(static_cast<int>(t));
            auto sol = solve_linear(M, std::vector<QFunc>(rows, QFunc(0)));
            for (const auto& v : sol.nullspace) {
                bool nontrivial = false;
                for (std::size_t j = nx; j < v.size(); ++j)
                    if (!v[j].is_zero()) nontrivial = true;
                if (!nontrivial) continue;
                KPoly X(std::vector<QFunc>(v.begin(), v.begin() + static_cast<long>(nx)));
                auto norm = clear_and_canonicalize({v.begin() + static_cast<long>(nx), v.end()});
                KFunc cert = KFunc(X, f.pow(m) * cd) * KFunc(norm.unit);
                ContCTPair pair{norm.op, cert};
                if (!verify_az(term, pair))
                    throw std::logic_error("az: certificate identity failed");
                return pair;
            }
        }
    }
    return std::nullopt;
}

bool verify_az(const HyperexpTerm& term, const ContCTPair& pair) {
    if (pair.op.is_zero()) return false;
    const KFunc f(embed(term.base));
    const KFunc cn(embed(term.prefactor.num())), cd(embed(term.prefactor.den()));
    KFunc logder = KFunc(dx(cn.num())) / cn - KFunc(dx(cd.num())) / cd +
                   KFunc(f.num().derivative()) / f * KFunc(QFunc::var());
    KFunc lhs(QFunc(0)), fj(QFunc(1));
    for (int j = 0; j <= pair.op.order(); ++j) {
        lhs += KFunc(QFunc(pair.op.coeff(j))) * fj;
        fj *= f;
    }
    KFunc rhs = pair.cert.derivative() + pair.cert * logder;
    return lhs.num() * rhs.den() == rhs.num() * lhs.den();
}

namespace {

// R(n, x0) as an element of Q(n); nullopt when the denominator vanishes
// identically at x0.
std::optional<QFunc> cert_at(const KFunc& cert, const Rational& x0) {
    auto at = [&](const KPoly& p) {
        QFunc acc(0);
        for (int i = p.degree(); i >= 0; --i) acc = acc * QFunc(x0) + p.coeff(i);
        return acc;
    };
    QFunc den = at(cert.den());
    if (den.is_zero()) return std::nullopt;
    return at(cert.num()) / den;
}

}  // namespace

ClosedForm az_definite(const HyperexpTerm& term, const ContCTPair& pair, const Rational& a,
                       const Rational& b) {
    ClosedForm out;
    for (int side = 0; side < 2; ++side) {
        const Rational& e = side == 0 ? b : a;
        const Rational sign = side == 0 ? Rational(1) : Rational(-1);
        auto rho = cert_at(pair.cert, e);
        if (!rho) throw std::domain_error("pole-at-endpoint");
        auto ce = term.prefactor.eval(e);
        if (!ce) throw std::domain_error("pole-at-endpoint");
        if (rho->is_zero() || ce->is_zero()) continue;
        const Rational scale = sign * *ce;
        const Rational w = term.base(e);
        if (!rho->den().is_constant())
            for (const auto& r : integer_roots_q(rho->den()))
                if (r >= 0) throw std::domain_error("pole-at-integer");
        if (w.is_zero()) {
            // f(e)^n dies for n >= 1; the n = 0 value (0^0 = 1) is explicit.
            HyperTermN t;
            t.start = 1;
            t.start_value = Rational(0);
            t.quotient = QFunc(1);
            t.prefix[0] = scale * *rho->eval(Rational(0));
            out.terms.push_back(t);
            continue;
        }
        QFunc quotient = qfunc_shift(*rho, 1) / *rho * QFunc(w);
        auto value_at = [rho, scale, w](long n) {
            return scale * *rho->eval(Rational(n)) * w.pow(n);
        };
        HyperTermN t = make_hyper_seq(0, quotient, value_at);
        if (!t.is_identically_zero()) out.terms.push_back(t);
    }
    return out;
}

}  // namespace telescope
