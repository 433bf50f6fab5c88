#include "telescope/ore.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace telescope {

OreOp::OreOp(std::vector<QPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

void OreOp::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

OreOp OreOp::shift() { return OreOp({QPoly(0), QPoly(1)}); }

OreOp OreOp::identity() { return OreOp({QPoly(1)}); }

const QPoly& OreOp::coeff(int i) const {
    static const QPoly zero;
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(i)];
}

OreOp OreOp::operator+(const OreOp& o) const {
    std::vector<QPoly> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff((int)i) + o.coeff((int)i);
    return OreOp(std::move(v));
}

OreOp OreOp::operator-(const OreOp& o) const { return *this + (-o); }

OreOp OreOp::operator-() const {
    std::vector<QPoly> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return OreOp(std::move(v));
}

OreOp OreOp::scaled(const QPoly& s) const {
    std::vector<QPoly> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return OreOp(std::move(v));
}

OreOp ore_mul(const OreOp& a, const OreOp& b) {
    if (a.is_zero() || b.is_zero()) return OreOp();
    std::vector<QPoly> v(static_cast<std::size_t>(a.order() + b.order()) + 1);
    for (int i = 0; i <= a.order(); ++i)
        for (int j = 0; j <= b.order(); ++j)
            v[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j).shift(i);
    return OreOp(std::move(v));
}

OreOp OreOp::canonical() const {
    if (is_zero()) return *this;
    // Remove the common polynomial factor (units of Q(n) scale freely), then
    // the rational content; sign fixed by the top term's leading coefficient.
    QPoly g;
    for (const auto& p : c_) g = poly_gcd(g, p);
    std::vector<QPoly> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[i] = g.degree() > 0 ? poly_divexact(c_[i], g) : c_[i];
    Int num_gcd(0), den_lcm(1);
    for (const auto& p : v)
        for (const auto& x : p.coeffs()) {
            if (x.is_zero()) continue;
            num_gcd = gcd(num_gcd, x.numerator());
            den_lcm = lcm(den_lcm, x.denominator());
        }
    Rational unit(num_gcd, den_lcm);
    if (v.back().lc().is_negative()) unit = -unit;
    for (auto& p : v) p = p / unit;
    return OreOp(std::move(v));
}

bool equal_up_to_unit(const OreOp& a, const OreOp& b) { return a.canonical() == b.canonical(); }

std::string OreOp::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = order(); i >= 0; --i) {
        if (!out.empty()) out += " + ";
        out += "(" + poly_str(coeff(i), "n") + ")*N^" + std::to_string(i);
    }
    return out;
}

namespace {

// Right division over Q(n): a = q∘b + r with ord r < ord b.
using FOp = std::vector<QFunc>;  // coefficient of N^i at index i

void ftrim(FOp& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

FOp to_fop(const OreOp& a) {
    FOp v;
    v.reserve(static_cast<std::size_t>(a.order()) + 1);
    for (int i = 0; i <= a.order(); ++i) v.push_back(QFunc(a.coeff(i)));
    ftrim(v);
    return v;
}

FOp right_rem(FOp a, const FOp& b) {
    while (a.size() >= b.size()) {
        const long d = static_cast<long>(a.size() - b.size());
        // (c * N^d) ∘ b has top coefficient c * b_top(n + d).
        QFunc c = a.back() / qfunc_shift(b.back(), d);
        for (std::size_t j = 0; j < b.size(); ++j)
            a[j + static_cast<std::size_t>(d)] -= c * qfunc_shift(b[j], d);
        a.pop_back();
        ftrim(a);
        if (a.empty()) break;
    }
    return a;
}

OreOp from_fop(const FOp& v) {
    // Clear the rational-function denominators to polynomial coefficients.
    QPoly den(1);
    for (const auto& f : v) den = poly_lcm(den, f.den());
    std::vector<QPoly> coeffs;
    coeffs.reserve(v.size());
    for (const auto& f : v) coeffs.push_back(f.num() * poly_divexact(den, f.den()));
    return OreOp(std::move(coeffs)).canonical();
}

}  // namespace

OreOp gcrd(const OreOp& a, const OreOp& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("gcrd: zero operator");
    FOp x = to_fop(a), y = to_fop(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        FOp r = right_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return from_fop(x);
}

Rational ore_apply(const OreOp& a, const std::function<std::optional<Rational>(long)>& values,
                   long n) {
    if (a.is_zero()) return Rational(0);
    Rational acc(0);
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        auto v = values(n + i);
        if (!v) throw std::domain_error("missing-values");
        acc += a.coeff(i)(Rational(n)) * *v;
    }
    return acc;
}

std::optional<Rational> HyperTermN::eval(long n) const {
    if (n < start) {
        auto it = prefix.find(n);
        if (it == prefix.end()) return std::nullopt;
        return it->second;
    }
    Rational v = start_value;
    for (long m = start; m < n; ++m) {
        if (v.is_zero()) return Rational(0);  // zero absorbs regardless of the quotient
        auto q = quotient.eval(Rational(m));
        if (!q) return std::nullopt;
        v *= *q;
    }
    return v;
}

long HyperTermN::first_defined() const {
    return prefix.empty() ? start : std::min(start, prefix.begin()->first);
}

bool HyperTermN::is_identically_zero() const {
    // A zero start value propagates forward through the quotient relation.
    if (!start_value.is_zero()) return false;
    for (const auto& [n, v] : prefix)
        if (!v.is_zero()) return false;
    return true;
}

HyperTermN HyperTermN::negated() const {
    HyperTermN t = *this;
    t.start_value = -t.start_value;
    for (auto& [n, v] : t.prefix) v = -v;
    return t;
}

HyperTermN make_hyper_seq(long base, const QFunc& quotient,
                          const std::function<Rational(long)>& value_at) {
    long start = base;
    if (!quotient.den().is_constant()) {
        for (const auto& r : integer_roots_q(quotient.den())) {
            if (!r.fits_slong_p()) continue;
            long n = r.get_si();
            if (n >= base && n + 1 > start) start = n + 1;
        }
    }
    HyperTermN t;
    t.start = start;
    t.quotient = quotient;
    for (long n = base; n < start; ++n) t.prefix.emplace(n, value_at(n));
    t.start_value = value_at(start);
    return t;
}

ClosedForm ClosedForm::constant(const Rational& c) {
    if (c.is_zero()) return zero();
    HyperTermN t;
    t.start = 0;
    t.start_value = c;
    t.quotient = QFunc(1);
    return {{t}};
}

std::optional<Rational> ClosedForm::eval(long n) const {
    Rational acc(0);
    for (const auto& t : terms) {
        auto v = t.eval(n);
        if (!v) return std::nullopt;
        acc += *v;
    }
    return acc;
}

ClosedForm ClosedForm::negated() const {
    ClosedForm r;
    r.terms.reserve(terms.size());
    for (const auto& t : terms) r.terms.push_back(t.negated());
    return r;
}

namespace {

// Merge terms that share a quotient; drop identically-zero terms whose prefix
// is also zero. Prefix-only terms are kept as they are.
std::vector<HyperTermN> merge_terms(std::vector<HyperTermN> terms) {
    std::vector<HyperTermN> out;
    for (auto& t : terms) {
        bool merged = false;
        for (auto& u : out) {
            if (u.quotient != t.quotient) continue;
            long s = std::max(u.start, t.start);
            long lo = std::min(u.first_defined(), t.first_defined());
            HyperTermN m;
            m.quotient = u.quotient;
            m.start = s;
            auto add = [&](long n) -> std::optional<Rational> {
                auto x = u.eval(n), y = t.eval(n);
                if (!x || !y) return std::nullopt;
                return *x + *y;
            };
            auto sv = add(s);
            if (!sv) continue;  // incompatible domains, keep separate
            m.start_value = *sv;
            bool ok = true;
            for (long n = lo; n < s && ok; ++n) {
                auto v = add(n);
                if (v)
                    m.prefix.emplace(n, *v);
                else if (u.eval(n) || t.eval(n))
                    ok = false;  // one side defined, the other not
            }
            if (!ok) continue;
            u = std::move(m);
            merged = true;
            break;
        }
        if (!merged) out.push_back(std::move(t));
    }
    std::vector<HyperTermN> kept;
    for (auto& t : out)
        if (!t.is_identically_zero()) kept.push_back(std::move(t));
    return kept;
}

}  // namespace

bool closed_form_equal(const ClosedForm& a, const ClosedForm& b) {
    std::vector<HyperTermN> diff = a.terms;
    for (const auto& t : b.terms) diff.push_back(t.negated());
    diff = merge_terms(std::move(diff));

    // The recurrence structure of every term holds from its start index on;
    // prefix exceptions below that are checked directly.
    long lo = 0;
    std::set<long> direct;
    for (const auto& t : diff) {
        lo = std::max(lo, t.start);
        for (const auto& [n, v] : t.prefix) direct.insert(n);
    }
    auto dval = [&](long n) -> std::optional<Rational> {
        Rational acc(0);
        for (const auto& t : diff) {
            auto v = t.eval(n);
            if (!v) return std::nullopt;
            acc += *v;
        }
        return acc;
    };

    // Iterated annihilator: P kills every hypergeometric part of the difference.
    // Applying the current P to a term with quotient q gives c(n)*term; the next
    // factor is N - q*c(n+1)/c(n) (skipped when c is already zero).
    std::vector<QFunc> P{QFunc(1)};  // coefficient of N^j at index j
    auto apply_symbol = [&](const std::vector<QFunc>& op, const QFunc& q) {
        QFunc acc(0), prod(1);
        for (std::size_t j = 0; j < op.size(); ++j) {
            acc += op[j] * prod;
            prod = prod * qfunc_shift(q, static_cast<long>(j));
        }
        return acc;
    };
    for (const auto& t : diff) {
        if (t.start_value.is_zero()) continue;  // zero from start on; only prefixes matter
        QFunc c = apply_symbol(P, t.quotient);
        if (c.is_zero()) continue;
        QFunc r = t.quotient * qfunc_shift(c, 1) / c;
        std::vector<QFunc> next(P.size() + 1, QFunc(0));
        for (std::size_t j = 0; j < P.size(); ++j) {
            next[j + 1] += qfunc_shift(P[j], 1);
            next[j] -= r * P[j];
        }
        P = std::move(next);
    }
    const long m = static_cast<long>(P.size()) - 1;
    if (m == 0) {
        // No hypergeometric part: only the prefix exceptions need checking.
        for (long n : direct) {
            auto v = dval(n);
            if (v && !v->is_zero()) return false;
        }
        // Every non-prefix term was skipped as zero; check a seed value anyway.
        auto v = dval(lo);
        return !v || v->is_zero();
    }

    // Direct checks: m consecutive seed values, plus one value a window past
    // every integer n >= lo where the annihilator degenerates (a coefficient
    // pole or a vanishing leading coefficient breaks the forward induction).
    QPoly den(1);
    for (const auto& f : P) den = poly_lcm(den, f.den());
    QPoly lead = P.back().num() * poly_divexact(den, P.back().den());
    for (long n = lo; n < lo + m; ++n) direct.insert(n);
    auto add_bad_roots = [&](const QPoly& p) {
        if (p.is_constant()) return;
        for (const auto& r : integer_roots_q(p)) {
            if (!r.fits_slong_p()) continue;
            long nr = r.get_si();
            if (nr >= lo) direct.insert(nr + m);
        }
    };
    add_bad_roots(lead);
    add_bad_roots(den);
    for (long n : direct) {
        auto v = dval(n);
        if (v && !v->is_zero()) return false;
    }
    return true;
}

SigmaNormal clear_and_canonicalize(const std::vector<QFunc>& sigma) {
    QPoly den(1);
    for (const auto& s : sigma) den = poly_lcm(den, s.den());
    std::vector<QPoly> coeffs;
    coeffs.reserve(sigma.size());
    for (const auto& s : sigma) coeffs.push_back(s.num() * poly_divexact(den, s.den()));
    OreOp canon = OreOp(std::move(coeffs)).canonical();
    for (int i = 0; i <= canon.order(); ++i) {
        if (canon.coeff(i).is_zero()) continue;
        return {canon, QFunc(canon.coeff(i)) / sigma[static_cast<std::size_t>(i)]};
    }
    throw std::domain_error("clear_and_canonicalize: zero operator");
}

OreOp homogenize(const OreOp& op, const HyperTermN& rhs) {
    if (rhs.is_identically_zero()) throw std::domain_error("zero-rhs");
    const QFunc& q = rhs.quotient;
    // H = N∘L - q(n)·L over Q(n), then cleared to polynomial coefficients.
    FOp h(static_cast<std::size_t>(op.order()) + 2, QFunc(0));
    for (int i = 0; i <= op.order(); ++i) {
        h[static_cast<std::size_t>(i) + 1] += QFunc(op.coeff(i).shift(1));
        h[static_cast<std::size_t>(i)] -= q * QFunc(op.coeff(i));
    }
    ftrim(h);
    return from_fop(h);
}

}  // namespace telescope
