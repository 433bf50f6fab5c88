#include "telescope/term.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace telescope {

std::string LinForm::str() const {
    std::string out;
    auto piece = [&](long coef, const char* name) {
        if (coef == 0) return;
        if (out.empty()) {
            if (coef == -1)
                out += "-";
            else if (coef != 1)
                out += std::to_string(coef) + "*";
        } else {
            out += coef < 0 ? " - " : " + ";
            if (coef != 1 && coef != -1) out += std::to_string(coef < 0 ? -coef : coef) + "*";
        }
        out += name;
    };
    piece(n, "n");
    piece(k, "k");
    if (c != 0 || out.empty()) {
        if (out.empty())
            out = std::to_string(c);
        else
            out += (c < 0 ? " - " : " + ") + std::to_string(c < 0 ? -c : c);
    }
    return out;
}

Rational factorial_value(long arg) {
    if (arg < 0) throw std::domain_error("factorial of negative integer");
    Rational r(1);
    for (long i = 2; i <= arg; ++i) r *= Rational(i);
    return r;
}

Rational binomial_value(const Rational& top, long bottom) {
    if (bottom < 0) return Rational(0);
    if (top.is_integer() && top.numerator().fits_slong_p()) {
        // memoized per run; the oracle grids hit the same cells repeatedly
        thread_local std::map<std::pair<long, long>, Rational> cache;
        auto key = std::make_pair(top.numerator().get_si(), bottom);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Rational num(1);
        for (long i = 0; i < bottom; ++i) num *= top - Rational(i);
        Rational v = num / factorial_value(bottom);
        cache.emplace(key, v);
        return v;
    }
    Rational num(1);
    for (long i = 0; i < bottom; ++i) num *= top - Rational(i);
    return num / factorial_value(bottom);
}

ProperTerm& ProperTerm::set_constant(const Rational& c) {
    constant_ = c;
    return *this;
}

ProperTerm& ProperTerm::mul_power(const Rational& base, const LinForm& expo) {
    if (base.is_zero()) throw std::invalid_argument("ProperTerm: zero power base");
    if (base.is_one()) return *this;
    for (auto& p : powers_)
        if (p.base == base) {
            p.expo.n += expo.n;
            p.expo.k += expo.k;
            p.expo.c += expo.c;
            return *this;
        }
    powers_.push_back({base, expo});
    return *this;
}

ProperTerm& ProperTerm::mul_binomial(const LinForm& top, const LinForm& bottom, Location loc) {
    BinomFactor f{top, bottom, loc, 1};
    for (auto& b : binomials_)
        if (b.same_shape(f)) {
            ++b.mult;
            return *this;
        }
    binomials_.push_back(f);
    return *this;
}

ProperTerm& ProperTerm::mul_factorial(const LinForm& arg, Location loc) {
    FactFactor f{arg, loc, 1};
    for (auto& x : factorials_)
        if (x.same_shape(f)) {
            ++x.mult;
            return *this;
        }
    factorials_.push_back(f);
    return *this;
}

ProperTerm& ProperTerm::mul_poly(const KPoly& p) {
    polyfactor_ *= p;
    return *this;
}

std::optional<Rational> ProperTerm::eval(long n0, long k0) const {
    Rational acc = constant_;
    for (const auto& p : powers_) acc *= p.base.pow(p.expo.eval(n0, k0));
    for (const auto& b : binomials_) {
        Rational v = binomial_value(Rational(b.top.eval(n0, k0)), b.bottom.eval(n0, k0));
        for (int i = 0; i < b.mult; ++i) {
            if (b.loc == Location::Numerator)
                acc *= v;
            else if (v.is_zero())
                return std::nullopt;  // undefined: zero denominator factor
            else
                acc /= v;
        }
    }
    for (const auto& f : factorials_) {
        long a = f.arg.eval(n0, k0);
        if (a < 0) return std::nullopt;  // undefined
        Rational v = factorial_value(a);
        for (int i = 0; i < f.mult; ++i) acc = f.loc == Location::Numerator ? acc * v : acc / v;
    }
    auto pv = kfunc_eval(KFunc(polyfactor_), Rational(n0), Rational(k0));
    if (!pv) return std::nullopt;
    return acc * *pv;
}

namespace {

KPoly linform_poly(const LinForm& f) {
    KPoly p = kpoly_from_n(QPoly(std::vector<Rational>{Rational(f.c), Rational(f.n)}));
    if (f.k != 0) p += KPoly::var() * QFunc(Rational(f.k));
    return p;
}

// (L+d)! / L! as an element of Q(n,k): a product of d linear factors (or the
// inverse product for d < 0). Valid as a formal identity of shift quotients.
KFunc factorial_ratio(const LinForm& arg, long d) {
    KPoly L = linform_poly(arg);
    KPoly num(QFunc(1)), den(QFunc(1));
    if (d >= 0)
        for (long i = 1; i <= d; ++i) num *= L + KPoly(QFunc(Rational(i)));
    else
        for (long i = 0; i < -d; ++i) den *= L - KPoly(QFunc(Rational(i)));
    return KFunc(num, den);
}

}  // namespace

KFunc ProperTerm::shift_quotient(Var var) const {
    const bool in_n = var == Var::N;
    KFunc q(QFunc(1));
    for (const auto& p : powers_) {
        long d = p.expo.coef(in_n);
        q *= KFunc(QFunc(p.base.pow(d)));
    }
    auto fact_part = [&](const LinForm& arg, Location loc, int mult) {
        KFunc r = factorial_ratio(arg, arg.coef(in_n));
        if (loc == Location::Denominator) r = KFunc(QFunc(1)) / r;
        for (int i = 0; i < mult; ++i) q *= r;
    };
    for (const auto& b : binomials_) {
        // C(t, s) = t! / (s! (t-s)!) as formal factorials.
        fact_part(b.top, b.loc, b.mult);
        Location inv = b.loc == Location::Numerator ? Location::Denominator : Location::Numerator;
        fact_part(b.bottom, inv, b.mult);
        LinForm diff{b.top.n - b.bottom.n, b.top.k - b.bottom.k, b.top.c - b.bottom.c};
        fact_part(diff, inv, b.mult);
    }
    for (const auto& f : factorials_) fact_part(f.arg, f.loc, f.mult);
    const bool poly_constant = polyfactor_.degree() <= 0 && polyfactor_.coeff(0).is_constant();
    if (!poly_constant) {
        KPoly shifted = in_n ? kpoly_shift_n(polyfactor_, 1) : kpoly_shift_k(polyfactor_, 1);
        q *= KFunc(shifted, polyfactor_);
    }
    return q;
}

VanishInfo ProperTerm::support_analysis(long max_shift) const {
    (void)max_shift;  // certificates below are uniform in the shift index
    VanishInfo info;
    // A certificate needs every other factor finite on the claimed set:
    // factorials can be undefined and denominator binomials can vanish, so
    // their presence blocks certification.
    if (!factorials_.empty()) return info;
    for (const auto& b : binomials_)
        if (b.loc == Location::Denominator) return info;

    for (const auto& b : binomials_) {
        const LinForm& t = b.top;
        const LinForm& s = b.bottom;
        // Lower: bottom < 0 for every k <= -1 and every shift m >= 0.
        if (s.k >= 1 && s.n <= 0 && s.c < s.k) info.lower_natural = true;
        auto offer = [&](VanishWindow w) {
            if (!info.upper) {
                info.upper = w;
                return;
            }
            // Prefer an unbounded window; then the lower edge.
            bool better = (!w.cap && info.upper->cap) ||
                          ((!w.cap == !info.upper->cap) &&
                           (w.edge.slope < info.upper->edge.slope ||
                            (w.edge.slope == info.upper->edge.slope &&
                             w.edge.offset < info.upper->edge.offset)));
            if (better) info.upper = w;
        };
        // Route A: bottom decreasing in k; C = 0 when bottom < 0, i.e. above
        // the line k = s.n*m + s.c.
        if (s.k == -1) offer({LinLine{s.n, s.c}, std::nullopt});
        // Route B1: top decreasing in k, bottom k-free; C = 0 exactly on
        // 0 <= top <= bottom-1, the window edge(m) < k <= cap(m).
        if (t.k == -1 && s.k == 0)
            offer({LinLine{t.n - s.n, t.c - s.c}, LinLine{t.n, t.c}});
        // Route B2: top k-free and nonnegative for every m >= 0, bottom
        // increasing in k; C = 0 for k past top - bottom offset.
        if (t.k == 0 && s.k == 1 && t.n >= 0 && t.c >= 0)
            offer({LinLine{t.n - s.n, t.c - s.c}, std::nullopt});
    }
    return info;
}

HyperTermN ProperTerm::specialize_line(long beta, long gamma, long base,
                                       const KFunc* multiplier) const {
    if (beta < 0) throw std::invalid_argument("specialize_line: negative slope");
    if (multiplier && kfunc_on_line(*multiplier, beta, gamma).is_zero()) {
        // The multiplier kills the whole line.
        HyperTermN t;
        t.start = base;
        t.start_value = Rational(0);
        t.quotient = QFunc(1);
        return t;
    }
    // g(n+1)/g(n) = H(n, beta*n+gamma) with H(n,k) = F(n+1,k+beta)/F(n,k):
    // composed and reduced bivariately first, so that intermediate zeros of F
    // along the stepping path cancel before the line is substituted.
    KFunc H = shift_quotient(Var::N);
    KFunc qk_up = kfunc_shift_n(shift_quotient(Var::K), 1);
    for (long i = 0; i < beta; ++i) H *= kfunc_shift_k(qk_up, i);
    if (multiplier) H *= kfunc_shift_k(kfunc_shift_n(*multiplier, 1), beta) / *multiplier;
    QFunc quotient = kfunc_on_line(H, beta, gamma);
    auto value_at = [this, beta, gamma, multiplier](long n) -> Rational {
        long k0 = beta * n + gamma;
        auto v = eval(n, k0);
        if (!v) throw std::domain_error("pole-on-line");
        if (!multiplier) return *v;
        auto m = kfunc_eval(*multiplier, Rational(n), Rational(k0));
        if (!m) throw std::domain_error("pole-on-line");
        return *m * *v;
    };
    return make_hyper_seq(base, quotient, value_at);
}

std::string ProperTerm::str() const {
    std::string out;
    auto mul = [&](const std::string& s) {
        if (!out.empty()) out += "*";
        out += s;
    };
    if (!constant_.is_one() || (powers_.empty() && binomials_.empty() && factorials_.empty()))
        mul(constant_.is_negative() ? "(" + constant_.str() + ")" : constant_.str());
    for (const auto& p : powers_) {
        std::string b = p.base.is_negative() || !p.base.is_integer() ? "(" + p.base.str() + ")"
                                                                     : p.base.str();
        mul(b + "^(" + p.expo.str() + ")");
    }
    std::string den;
    for (const auto& b : binomials_) {
        std::string s = "binomial(" + b.top.str() + "," + b.bottom.str() + ")";
        for (int i = 0; i < b.mult; ++i) {
            if (b.loc == Location::Numerator)
                mul(s);
            else
                den += (den.empty() ? "" : "*") + s;
        }
    }
    for (const auto& f : factorials_) {
        std::string s = "factorial(" + f.arg.str() + ")";
        for (int i = 0; i < f.mult; ++i) {
            if (f.loc == Location::Numerator)
                mul(s);
            else
                den += (den.empty() ? "" : "*") + s;
        }
    }
    if (!den.empty()) out += "/(" + den + ")";
    return out;
}

std::optional<Rational> HyperexpTerm::eval(long n0, const Rational& x0) const {
    auto c = prefactor.eval(x0);
    if (!c) return std::nullopt;
    Rational f = base(x0);
    if (f.is_zero() && n0 == 0) return *c;  // 0^0 = 1 convention at the boundary
    return *c * f.pow(n0);
}

std::string HyperexpTerm::str() const {
    std::string f = "(" + poly_str(base, "x") + ")^n";
    if (prefactor.is_one()) return f;
    if (prefactor.is_constant()) return prefactor.constant_value().str() + "*" + f;
    return "(" + poly_str(prefactor.num(), "x") + ")/(" + poly_str(prefactor.den(), "x") + ")*" + f;
}

}  // namespace telescope
