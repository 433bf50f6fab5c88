#include "telescope/zeilberger.hpp"

#include "telescope/linsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace telescope {

namespace {

// F(n+j,k)/F(n,k) for j = 0..J, as reduced elements of Q(n,k).
std::vector<KFunc> shift_powers(const KFunc& qn, int J) {
    std::vector<KFunc> p(static_cast<std::size_t>(J) + 1);
    p[0] = KFunc(QFunc(1));
    for (int j = 1; j <= J; ++j) p[j] = p[j - 1] * kfunc_shift_n(qn, j - 1);
    return p;
}

struct RawSolution {
    std::vector<QFunc> sigma;  // sigma_0 .. sigma_J, not all zero
    KPoly x;                   // polynomial part of the certificate
};

// Parametrized Gosper step at a fixed order J: solve
//   a(k) x(k+1) - b(k-1) x(k) = c(k) * Σ_j sigma_j f_j(k)
// jointly for x and sigma with sigma nontrivial.
std::optional<RawSolution> solve_order(const GosperForm<QFunc>& nf, const std::vector<KPoly>& f) {
    const KPoly bm = nf.b.shift(-1);
    long fdeg = 0;
    for (const auto& fj : f) fdeg = std::max(fdeg, static_cast<long>(fj.degree()));
    const long d = gosper_degree_bound(nf.a, bm, nf.c.degree() + fdeg);

    std::vector<KPoly> cols;
    const KPoly kp1(std::vector<QFunc>{QFunc(1), QFunc(1)});
    KPoly shifted(QFunc(1)), plain(QFunc(1));
    for (long i = 0; i <= d; ++i) {
        cols.push_back(nf.a * shifted - bm * plain);
        shifted *= kp1;
        plain *= KPoly::var();
    }
    const std::size_t nx = cols.size();
    for (const auto& fj : f) cols.push_back(-(nf.c * fj));

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
        RawSolution out;
        out.x = KPoly(std::vector<QFunc>(v.begin(), v.begin() + static_cast<long>(nx)));
        out.sigma.assign(v.begin() + static_cast<long>(nx), v.end());
        return out;
    }
    return std::nullopt;
}

}  // namespace

std::optional<CTPair> zeilberger(const ProperTerm& term, int max_order) {
    const KFunc qk = term.shift_quotient(Var::K);
    const KFunc qn = term.shift_quotient(Var::N);
    for (int J = 0; J <= max_order; ++J) {
        auto p = shift_powers(qn, J);
        KPoly g(QFunc(1));
        for (const auto& pj : p) g = poly_lcm(g, pj.den());
        std::vector<KPoly> f(p.size());
        for (std::size_t j = 0; j < p.size(); ++j)
            f[j] = p[j].num() * poly_divexact(g, p[j].den());
        // F^ = F/g has the sigma-free ratio r^ = q_k g / g(k+1).
        KFunc rhat = qk * KFunc(g, kpoly_shift_k(g, 1));
        GosperForm<QFunc> nf = gosper_form(rhat);
        auto raw = solve_order(nf, f);
        if (!raw) continue;
        auto norm = clear_and_canonicalize(raw->sigma);
        KFunc cert(nf.b.shift(-1) * raw->x, nf.c * g);
        CTPair pair{norm.op, cert * KFunc(norm.unit)};
        if (!verify_ct(term, pair))
            throw std::logic_error("zeilberger: certificate identity failed");
        return pair;
    }
    return std::nullopt;
}

bool verify_ct(const ProperTerm& term, const CTPair& pair) {
    if (pair.op.is_zero()) return false;
    const KFunc qk = term.shift_quotient(Var::K);
    const KFunc qn = term.shift_quotient(Var::N);
    auto p = shift_powers(qn, pair.op.order());
    KFunc lhs(QFunc(0));
    for (int j = 0; j <= pair.op.order(); ++j)
        lhs += KFunc(KPoly(QFunc(pair.op.coeff(j)))) * p[static_cast<std::size_t>(j)];
    KFunc rhs = kfunc_shift_k(pair.cert, 1) * qk - pair.cert;
    // cleared-denominator bivariate polynomial identity
    return lhs.num() * rhs.den() == rhs.num() * lhs.den();
}

Rational direct_sum(const ProperTerm& term, const SumRange& range, long n) {
    Rational acc(0);
    const long hi = range.upper_at(n);
    for (long k = range.lower; k <= hi; ++k) {
        auto v = term.eval(n, k);
        if (!v) throw std::domain_error("undefined");
        acc += *v;
    }
    return acc;
}

namespace {

// Smallest n0 >= 0 with s*n + c >= 0 for all n >= n0; nullopt if none exists.
std::optional<long> threshold(long s, long c) {
    if (s == 0) return c >= 0 ? std::optional<long>(0) : std::nullopt;
    if (s < 0) return std::nullopt;
    if (c >= 0) return 0;
    return (-c + s - 1) / s;  // ceil(-c/s)
}

}  // namespace

ClosedForm boundary_rhs(const ProperTerm& term, const CTPair& pair, const SumRange& range) {
    const int J = pair.op.order();
    const VanishInfo info = term.support_analysis(J);
    if (!info.upper) throw std::domain_error("unsupported-range");
    const LinLine edge = info.upper->edge;

    long n0 = 0;
    auto require = [&](std::optional<long> t) {
        if (!t) throw std::domain_error("unsupported-range");
        n0 = std::max(n0, *t);
    };
    // b(n+j) >= edge(n+j) for all 0 <= j <= J: the sum's tail sits inside the
    // certified window.
    for (long j = 0; j <= J; ++j)
        require(threshold(range.slope - edge.slope,
                          (range.slope - edge.slope) * j + range.offset - edge.offset));

    // Extension line K(n): the window cap when bounded, else the smallest line
    // covering every shifted upper bound.
    LinLine K;
    if (info.upper->cap) {
        K = *info.upper->cap;
        for (long j = 0; j <= J; ++j)
            require(threshold(K.slope - range.slope,
                              K.offset - range.slope * j - range.offset));
    } else {
        K = LinLine{range.slope, range.offset + range.slope * J};
    }

    const bool lower_closed = info.lower_natural && range.lower <= 0;

    auto sum_at = [&](long n) -> std::optional<Rational> { return direct_sum(term, range, n); };

    for (int attempt = 0; attempt < 64; ++attempt, ++n0) {
        std::vector<HyperTermN> terms;
        try {
            if (info.upper->cap) {
                HyperTermN up = term.specialize_line(K.slope, K.offset + 1, n0, &pair.cert);
                if (!up.is_identically_zero()) terms.push_back(up);
            }
            if (!lower_closed) {
                HyperTermN low =
                    term.specialize_line(0, range.lower, n0, &pair.cert).negated();
                if (!low.is_identically_zero()) terms.push_back(low);
            }
        } catch (const std::domain_error&) {
            continue;  // a pole on a boundary line: raise the start index
        }
        // Indices below n0 are recorded explicitly from the recurrence applied
        // to directly evaluated sums.
        if (n0 > 0) {
            std::vector<Rational> vals;
            bool nonzero = false;
            for (long n = 0; n < n0; ++n) {
                vals.push_back(ore_apply(pair.op, sum_at, n));
                if (!vals.back().is_zero()) nonzero = true;
            }
            if (terms.empty() && nonzero) {
                HyperTermN carrier;
                carrier.start = n0;
                carrier.start_value = Rational(0);
                carrier.quotient = QFunc(1);
                terms.push_back(carrier);
            }
            for (std::size_t t = 0; t < terms.size(); ++t)
                for (long n = 0; n < n0; ++n)
                    terms[t].prefix[n] = t == 0 ? vals[static_cast<std::size_t>(n)] : Rational(0);
        }
        ClosedForm rhs{terms};
        // Postcondition: L·S(n) = RHS(n) on the verification window.
        for (long n = 0; n <= n0 + J + 20; ++n) {
            auto r = rhs.eval(n);
            if (!r || *r != ore_apply(pair.op, sum_at, n))
                throw std::logic_error("boundary_rhs: verification window failed");
        }
        return rhs;
    }
    throw std::domain_error("pole-on-boundary");
}

}  // namespace telescope
