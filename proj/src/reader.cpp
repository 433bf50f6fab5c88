#include "telescope/reader.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace telescope {

namespace {

/* Tokenizer */

struct Token {
    enum class Type { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };
    Type type;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Type::Number, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Type::Name, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        switch (c) {
            case '+': out.push_back({Token::Type::Plus, "+", i}); break;
            case '-': out.push_back({Token::Type::Minus, "-", i}); break;
            case '*':
                if (i + 1 < s.size() && s[i + 1] == '*') {
                    out.push_back({Token::Type::Caret, "**", i});
                    ++i;
                } else {
                    out.push_back({Token::Type::Star, "*", i});
                }
                break;
            case '/': out.push_back({Token::Type::Slash, "/", i}); break;
            case '^': out.push_back({Token::Type::Caret, "^", i}); break;
            case '(': out.push_back({Token::Type::LParen, "(", i}); break;
            case ')': out.push_back({Token::Type::RParen, ")", i}); break;
            case ',': out.push_back({Token::Type::Comma, ",", i}); break;
            case '[': case ']':  // tolerated as grouping in operator pairs
                out.push_back({c == '[' ? Token::Type::LParen : Token::Type::RParen,
                               std::string(1, c), i});
                break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        ++i;
    }
    out.push_back({Token::Type::End, "", s.size()});
    return out;
}

/* Recursive-descent parser */

struct Parser {
    std::vector<Token> toks;
    std::size_t at = 0;

    const Token& peek() const { return toks[at]; }
    Token next() { return toks[at++]; }
    bool accept(Token::Type t) {
        if (peek().type != t) return false;
        ++at;
        return true;
    }
    void expect(Token::Type t, const char* what) {
        if (!accept(t)) throw ParseError(std::string("expected ") + what, peek().pos);
    }

    static ExprPtr make(Expr::Kind k, std::vector<ExprPtr> args = {}, std::string name = {},
                        Rational num = Rational(0)) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->number = num;
        e->name = std::move(name);
        e->args = std::move(args);
        return e;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (true) {
            if (accept(Token::Type::Plus))
                lhs = make(Expr::Kind::Add, {lhs, term()});
            else if (accept(Token::Type::Minus))
                lhs = make(Expr::Kind::Sub, {lhs, term()});
            else
                return lhs;
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (true) {
            if (accept(Token::Type::Star))
                lhs = make(Expr::Kind::Mul, {lhs, factor()});
            else if (accept(Token::Type::Slash))
                lhs = make(Expr::Kind::Div, {lhs, factor()});
            else
                return lhs;
        }
    }

    ExprPtr factor() {
        if (accept(Token::Type::Minus)) return make(Expr::Kind::Neg, {factor()});
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (accept(Token::Type::Caret)) return make(Expr::Kind::Pow, {base, power()});
        return base;
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.type) {
            case Token::Type::Number: {
                next();
                return make(Expr::Kind::Number, {}, {}, Rational(Int(t.text)));
            }
            case Token::Type::Name: {
                next();
                std::string name = t.text;
                if (name == "j") name = "k";  // the paper's j is this artifact's k
                if (peek().type == Token::Type::LParen) {
                    if (name != "binomial" && name != "factorial")
                        throw ParseError("unknown function '" + name + "'", t.pos);
                    next();
                    std::vector<ExprPtr> args{expr()};
                    while (accept(Token::Type::Comma)) args.push_back(expr());
                    expect(Token::Type::RParen, "')'");
                    std::size_t want = name == "binomial" ? 2 : 1;
                    if (args.size() != want)
                        throw ParseError(name + ": wrong argument count", t.pos);
                    return make(Expr::Kind::Call, std::move(args), name);
                }
                return make(Expr::Kind::Var, {}, name);
            }
            case Token::Type::LParen: {
                next();
                ExprPtr e = expr();
                expect(Token::Type::RParen, "')'");
                return e;
            }
            default: throw ParseError("expected a value", t.pos);
        }
    }
};

}  // namespace

ExprPtr parse_expr(const std::string& text) {
    Parser p{tokenize(text)};
    ExprPtr e = p.expr();
    if (p.peek().type != Token::Type::End) throw ParseError("trailing input", p.peek().pos);
    return e;
}

std::optional<Rational> eval_expr(const ExprPtr& e, const std::map<std::string, Rational>& vars) {
    using K = Expr::Kind;
    auto rec = [&](const ExprPtr& sub) { return eval_expr(sub, vars); };
    switch (e->kind) {
        case K::Number: return e->number;
        case K::Var: {
            auto it = vars.find(e->name);
            if (it == vars.end()) return std::nullopt;
            return it->second;
        }
        case K::Neg: {
            auto v = rec(e->args[0]);
            if (!v) return std::nullopt;
            return -*v;
        }
        case K::Add: case K::Sub: case K::Mul: case K::Div: {
            auto a = rec(e->args[0]), b = rec(e->args[1]);
            if (!a || !b) return std::nullopt;
            if (e->kind == K::Add) return *a + *b;
            if (e->kind == K::Sub) return *a - *b;
            if (e->kind == K::Mul) return *a * *b;
            if (b->is_zero()) return std::nullopt;
            return *a / *b;
        }
        case K::Pow: {
            auto a = rec(e->args[0]), b = rec(e->args[1]);
            if (!a || !b || !b->is_integer()) return std::nullopt;
            long ee = b->to_long();
            if (a->is_zero() && ee < 0) return std::nullopt;
            if (a->is_zero() && ee == 0) return Rational(1);
            return a->pow(ee);
        }
        case K::Call: {
            auto a = rec(e->args[0]);
            if (!a) return std::nullopt;
            if (e->name == "factorial") {
                if (!a->is_integer() || a->is_negative()) return std::nullopt;
                return factorial_value(a->to_long());
            }
            auto b = rec(e->args[1]);
            if (!b || !b->is_integer()) return std::nullopt;
            return binomial_value(*a, b->to_long());
        }
    }
    return std::nullopt;
}

/* Conversion helpers */

namespace {

// AST -> polynomial in (n, k) over Q; nullopt when the expression is not such
// a polynomial (division by non-constants, other variables, calls).
std::optional<KPoly> to_nk_poly(const ExprPtr& e) {
    using K = Expr::Kind;
    switch (e->kind) {
        case K::Number: return KPoly(QFunc(e->number));
        case K::Var:
            if (e->name == "n") return kpoly_from_n(QPoly(std::vector<Rational>{0, 1}));
            if (e->name == "k") return KPoly::var();
            return std::nullopt;
        case K::Neg: {
            auto v = to_nk_poly(e->args[0]);
            if (!v) return std::nullopt;
            return -*v;
        }
        case K::Add: case K::Sub: case K::Mul: {
            auto a = to_nk_poly(e->args[0]), b = to_nk_poly(e->args[1]);
            if (!a || !b) return std::nullopt;
            if (e->kind == K::Add) return *a + *b;
            if (e->kind == K::Sub) return *a - *b;
            return *a * *b;
        }
        case K::Div: {
            auto a = to_nk_poly(e->args[0]), b = to_nk_poly(e->args[1]);
            if (!a || !b) return std::nullopt;
            if (b->degree() != 0 || !b->coeff(0).is_constant()) return std::nullopt;
            QFunc c = b->coeff(0);
            if (c.is_zero()) return std::nullopt;
            return *a * KPoly(QFunc(1) / c);
        }
        case K::Pow: {
            auto a = to_nk_poly(e->args[0]);
            if (!a) return std::nullopt;
            if (e->args[1]->kind != K::Number) return std::nullopt;
            const Rational& x = e->args[1]->number;
            if (!x.is_integer() || x.is_negative()) return std::nullopt;
            return a->pow(x.to_long());
        }
        default: return std::nullopt;
    }
}

std::optional<LinForm> to_linform(const ExprPtr& e) {
    auto p = to_nk_poly(e);
    if (!p || p->degree() > 1) return std::nullopt;
    const QFunc& c1 = p->coeff(1);
    const QFunc& c0 = p->coeff(0);
    if (!c1.is_constant() || !c1.constant_value().is_integer()) return std::nullopt;
    if (!c0.is_polynomial() || c0.num().degree() > 1) return std::nullopt;
    Rational a = c0.num().coeff(1), e0 = c0.num().coeff(0);
    if (!a.is_integer() || !e0.is_integer()) return std::nullopt;
    return LinForm{a.to_long(), c1.constant_value().to_long(), e0.to_long()};
}

// AST -> univariate polynomial in x over Q.
std::optional<QPoly> to_x_poly(const ExprPtr& e) {
    using K = Expr::Kind;
    switch (e->kind) {
        case K::Number: return QPoly(e->number);
        case K::Var:
            if (e->name == "x") return QPoly::var();
            return std::nullopt;
        case K::Neg: {
            auto v = to_x_poly(e->args[0]);
            if (!v) return std::nullopt;
            return -*v;
        }
        case K::Add: case K::Sub: case K::Mul: {
            auto a = to_x_poly(e->args[0]), b = to_x_poly(e->args[1]);
            if (!a || !b) return std::nullopt;
            if (e->kind == K::Add) return *a + *b;
            if (e->kind == K::Sub) return *a - *b;
            return *a * *b;
        }
        case K::Div: {
            auto a = to_x_poly(e->args[0]), b = to_x_poly(e->args[1]);
            if (!a || !b || b->degree() != 0 || b->is_zero()) return std::nullopt;
            return *a / b->coeff(0);
        }
        case K::Pow: {
            auto a = to_x_poly(e->args[0]);
            if (!a || e->args[1]->kind != K::Number) return std::nullopt;
            const Rational& x = e->args[1]->number;
            if (!x.is_integer() || x.is_negative()) return std::nullopt;
            return a->pow(x.to_long());
        }
        default: return std::nullopt;
    }
}

bool contains_var(const ExprPtr& e, const std::string& v) {
    if (e->kind == Expr::Kind::Var) return e->name == v;
    for (const auto& a : e->args)
        if (contains_var(a, v)) return true;
    return false;
}

// Constant folding for power bases like (-3).
std::optional<Rational> fold_constant(const ExprPtr& e) {
    return eval_expr(e, {});
}

struct TermBuilder {
    ProperTerm term;

    void take(const ExprPtr& e, int sign, long mult);

    void take_pow(const ExprPtr& base, const ExprPtr& expo, int sign, long mult) {
        if (auto c = fold_constant(base)) {
            if (c->is_zero()) throw std::domain_error("not-proper: zero power base");
            auto lin = to_linform(expo);
            if (!lin) throw std::domain_error("not-proper: power exponent not integer-linear");
            LinForm l = *lin;
            long s = sign * mult;
            term.mul_power(*c, LinForm{l.n * s, l.k * s, l.c * s});
            return;
        }
        if (expo->kind == Expr::Kind::Number && expo->number.is_integer() &&
            !expo->number.is_negative()) {
            long e = expo->number.to_long();
            for (long i = 0; i < e * mult; ++i) take(base, sign, 1);
            return;
        }
        throw std::domain_error("not-proper: unsupported power");
    }

    void take_call(const ExprPtr& e, int sign, long mult) {
        Location loc = sign > 0 ? Location::Numerator : Location::Denominator;
        if (e->name == "binomial") {
            auto t = to_linform(e->args[0]), b = to_linform(e->args[1]);
            if (!t || !b) throw std::domain_error("not-proper: binomial arguments not integer-linear");
            for (long i = 0; i < mult; ++i) term.mul_binomial(*t, *b, loc);
            return;
        }
        auto a = to_linform(e->args[0]);
        if (!a) throw std::domain_error("not-proper: factorial argument not integer-linear");
        for (long i = 0; i < mult; ++i) term.mul_factorial(*a, loc);
    }
};

void TermBuilder::take(const ExprPtr& e, int sign, long mult) {
    using K = Expr::Kind;
    switch (e->kind) {
        case K::Mul:
            take(e->args[0], sign, mult);
            take(e->args[1], sign, mult);
            return;
        case K::Div:
            take(e->args[0], sign, mult);
            take(e->args[1], -sign, mult);
            return;
        case K::Neg:
            term.set_constant(term.constant() * (mult % 2 ? Rational(-1) : Rational(1)));
            take(e->args[0], sign, mult);
            return;
        case K::Number: {
            Rational c = e->number;
            if (c.is_zero()) throw std::domain_error("not-proper: zero factor");
            Rational f = c.pow(sign * mult);
            term.set_constant(term.constant() * f);
            return;
        }
        case K::Pow:
            take_pow(e->args[0], e->args[1], sign, mult);
            return;
        case K::Call:
            take_call(e, sign, mult);
            return;
        default: {
            auto p = to_nk_poly(e);
            if (!p) throw std::domain_error("not-proper: unrecognized factor");
            if (sign < 0) {
                if (p->degree() != 0 || !p->coeff(0).is_constant())
                    throw std::domain_error("not-proper: division by a non-constant polynomial");
                Rational c = p->coeff(0).constant_value();
                if (c.is_zero()) throw std::domain_error("not-proper: division by zero");
                term.set_constant(term.constant() * c.pow(-mult));
                return;
            }
            for (long i = 0; i < mult; ++i) term.mul_poly(*p);
            return;
        }
    }
}

/* Hyperexponential recognition: c(x) * f(x)^n */

struct HyperBuilder {
    QPoly cnum = QPoly(Rational(1)), cden = QPoly(Rational(1));
    std::optional<QPoly> base;

    void take(const ExprPtr& e, int sign) {
        using K = Expr::Kind;
        switch (e->kind) {
            case K::Mul:
                take(e->args[0], sign);
                take(e->args[1], sign);
                return;
            case K::Div:
                take(e->args[0], sign);
                take(e->args[1], -sign);
                return;
            case K::Neg:
                cnum = -cnum;
                take(e->args[0], sign);
                return;
            case K::Pow: {
                const ExprPtr& expo = e->args[1];
                if (expo->kind == K::Var && expo->name == "n") {
                    auto f = to_x_poly(e->args[0]);
                    if (!f || f->is_zero())
                        throw std::domain_error("not-hyperexponential: bad base");
                    if (base || sign < 0)
                        throw std::domain_error("not-hyperexponential: shape");
                    base = *f;
                    return;
                }
                break;
            }
            default: break;
        }
        auto p = to_x_poly(e);
        if (!p || p->is_zero()) throw std::domain_error("not-hyperexponential: shape");
        if (sign > 0)
            cnum *= *p;
        else
            cden *= *p;
    }
};

}  // namespace

std::variant<ProperTerm, HyperexpTerm> parse_term(const std::string& text) {
    ExprPtr ast = parse_expr(text);
    if (contains_var(ast, "x")) {
        HyperBuilder hb;
        hb.take(ast, 1);
        if (!hb.base) throw std::domain_error("not-hyperexponential: no f(x)^n factor");
        HyperexpTerm t{QFunc(hb.cnum, hb.cden), *hb.base};
        // cross-check against the AST at sample points
        static const Rational xs[] = {Rational(0),     Rational(1),     Rational(1, 2),
                                      Rational(-1, 2), Rational(2),     Rational(3, 2),
                                      Rational(-1),    Rational(5, 3)};
        for (long n = 0; n <= 4; ++n)
            for (const auto& x0 : xs) {
                auto direct = eval_expr(ast, {{"n", Rational(n)}, {"x", x0}});
                auto structured = t.eval(n, x0);
                if (direct.has_value() != structured.has_value()) continue;  // 0^0 edges
                if (direct && *direct != *structured)
                    throw std::logic_error("parse_term: structured value mismatch");
            }
        return t;
    }
    TermBuilder tb;
    tb.take(ast, 1, 1);
    for (long n = 0; n <= 4; ++n)
        for (long k = -3; k <= 8; ++k) {
            auto direct = eval_expr(ast, {{"n", Rational(n)}, {"k", Rational(k)}});
            auto structured = tb.term.eval(n, k);
            if (direct.has_value() && structured.has_value() && *direct != *structured)
                throw std::logic_error("parse_term: structured value mismatch");
        }
    return tb.term;
}

/* Printing */

namespace {

struct FactoredPoly {
    Rational front;
    std::vector<std::pair<QPoly, int>> factors;  // linear factor, multiplicity
};

std::vector<Int> positive_divisors(const Int& m0) {
    Int m = ::abs(m0);
    std::vector<Int> out;
    for (Int d(1); d * d <= m; ++d) {
        if (m % d != 0) continue;
        out.push_back(d);
        if (d * d != m) out.push_back(m / d);
        if (out.size() > 4096) break;  // give up; the caller falls back to expanded form
    }
    return out;
}

// Full factorization into integer-coefficient linear factors, or nullopt.
std::optional<FactoredPoly> factor_linear(const QPoly& p) {
    if (p.is_zero() || p.degree() == 0) return FactoredPoly{p.coeff(0), {}};
    auto norm = integer_normalize(p);
    QPoly rest = norm.primitive;
    std::vector<std::pair<Rational, int>> roots;  // root, multiplicity
    int v = 0;
    while (rest.coeff(v).is_zero()) ++v;
    if (v > 0) {
        roots.emplace_back(Rational(0), v);
        std::vector<Rational> shifted(rest.coeffs().begin() + v, rest.coeffs().end());
        rest = QPoly(std::move(shifted));
    }
    if (rest.degree() > 0) {
        // rational roots p/q: p | trailing, q | leading (primitive integer part)
        for (const Int& pn : positive_divisors(rest.coeff(0).numerator())) {
            for (const Int& qd : positive_divisors(rest.lc().numerator())) {
                for (int s : {1, -1}) {
                    Rational cand(s > 0 ? pn : Int(-pn), qd);
                    int m = 0;
                    QPoly lin(std::vector<Rational>{-cand, Rational(1)});
                    while (rest.degree() > 0 && rest.eval(cand).is_zero()) {
                        rest = poly_divexact(rest, lin);
                        ++m;
                    }
                    if (m > 0) roots.emplace_back(cand, m);
                }
            }
        }
    }
    if (rest.degree() > 0) return std::nullopt;  // an irreducible nonlinear part remains
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    FactoredPoly out;
    out.front = norm.unit * rest.coeff(0);
    for (const auto& [r, m] : roots) {
        // root p/q -> primitive factor (q n - p)
        const Int mn = -r.numerator();
        QPoly f(std::vector<Rational>{Rational(mn), Rational(r.denominator())});
        out.front = out.front / Rational(r.denominator()).pow(m);
        out.factors.emplace_back(f, m);
    }
    return out;
}

std::string paper_coeff(const QPoly& p, int npow, bool& negative) {
    auto fac = factor_linear(p);
    std::string body;
    Rational front = fac ? fac->front : Rational(1);
    if (fac) {
        negative = front.is_negative();
        Rational af = front.abs();
        bool wrote = false;
        if (!af.is_one() || fac->factors.empty()) {
            body += af.str();
            wrote = true;
        }
        for (const auto& [f, m] : fac->factors)
            for (int i = 0; i < m; ++i) {
                if (wrote) body += "*";
                body += "(" + poly_str(f, "n") + ")";
                wrote = true;
            }
    } else {
        negative = p.lc().is_negative();
        body = "(" + poly_str(negative ? -p : p, "n") + ")";
    }
    if (npow >= 1) {
        if (body == "1")
            body = "N";
        else
            body += "*N";
        if (npow > 1) body += "^" + std::to_string(npow);
    }
    return body;
}

}  // namespace

std::string print_closed_form(const ClosedForm& f) {
    if (f.is_zero()) return "0";
    // a single constant term prints as the bare value
    if (f.terms.size() == 1 && f.terms[0].quotient.is_one() && f.terms[0].prefix.empty() &&
        f.terms[0].start == 0)
        return f.terms[0].start_value.str();
    std::string out;
    for (const auto& t : f.terms) {
        if (!out.empty()) out += " + ";
        out += "hyper(start=" + std::to_string(t.start) + ", value=" + t.start_value.str() +
               ", quotient=" + print_qfunc(t.quotient);
        for (const auto& [n, v] : t.prefix)
            out += ", at(" + std::to_string(n) + ")=" + v.str();
        out += ")";
    }
    return out;
}

std::string print_operator(const OreOp& op, const ClosedForm& rhs, OpStyle style) {
    if (style == OpStyle::Canonical) return op.str();
    // paper style: unit chosen so the lowest-order nonzero coefficient leads
    // with a positive sign
    OreOp c = op.canonical();
    bool flip = false;
    for (int i = 0; i <= c.order(); ++i) {
        if (c.coeff(i).is_zero()) continue;
        flip = c.coeff(i).lc().is_negative();
        break;
    }
    OreOp shown = flip ? -c : c;
    std::string out = "[";
    bool first = true;
    for (int i = 0; i <= shown.order(); ++i) {
        if (shown.coeff(i).is_zero()) continue;
        bool neg = false;
        std::string body = paper_coeff(shown.coeff(i), i, neg);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += body;
    }
    ClosedForm shown_rhs = flip ? rhs.negated() : rhs;
    out += ", " + print_closed_form(shown_rhs) + "]";
    return out;
}

OreOp parse_operator(const std::string& text) {
    ExprPtr ast = parse_expr(text);
    // evaluate in Q(n)[N]: reuse the (n,k) polynomial converter with k := N
    std::function<std::optional<KPoly>(const ExprPtr&)> conv = [&](const ExprPtr& e)
        -> std::optional<KPoly> {
        using K = Expr::Kind;
        switch (e->kind) {
            case K::Var:
                if (e->name == "N") return KPoly::var();
                if (e->name == "n") return kpoly_from_n(QPoly(std::vector<Rational>{0, 1}));
                return std::nullopt;
            case K::Number: return KPoly(QFunc(e->number));
            case K::Neg: {
                auto v = conv(e->args[0]);
                if (!v) return std::nullopt;
                return -*v;
            }
            case K::Add: case K::Sub: case K::Mul: {
                auto a = conv(e->args[0]), b = conv(e->args[1]);
                if (!a || !b) return std::nullopt;
                if (e->kind == K::Add) return *a + *b;
                if (e->kind == K::Sub) return *a - *b;
                return *a * *b;
            }
            case K::Div: {
                auto a = conv(e->args[0]), b = conv(e->args[1]);
                if (!a || !b || b->degree() != 0 || !b->coeff(0).is_constant())
                    return std::nullopt;
                return *a * KPoly(QFunc(1) / b->coeff(0));
            }
            case K::Pow: {
                auto a = conv(e->args[0]);
                if (!a || e->args[1]->kind != K::Number) return std::nullopt;
                const Rational& x = e->args[1]->number;
                if (!x.is_integer() || x.is_negative()) return std::nullopt;
                return a->pow(x.to_long());
            }
            default: return std::nullopt;
        }
    };
    auto p = conv(ast);
    if (!p) throw std::domain_error("parse_operator: not a polynomial in N over Q[n]");
    std::vector<QPoly> coeffs;
    for (int i = 0; i <= p->degree(); ++i) {
        const QFunc& c = p->coeff(i);
        if (!c.is_polynomial())
            throw std::domain_error("parse_operator: coefficient not polynomial in n");
        coeffs.push_back(c.num());
    }
    return OreOp(std::move(coeffs));
}

/* Rational-function strings */

namespace {

struct BivarInt {
    // integer bivariate polynomials, common content removed
    KPoly num, den;
};

// Scale num/den jointly to integer coefficients with content 1; the sign is
// carried by the numerator (den gets a positive leading coefficient).
BivarInt clear_bivar(const KFunc& f) {
    QPoly den_n(1);
    auto collect = [&](const KPoly& p) {
        for (const auto& c : p.coeffs()) den_n = poly_lcm(den_n, c.den());
    };
    collect(f.num());
    collect(f.den());
    auto scale_poly = [&](const KPoly& p) {
        std::vector<QFunc> v;
        v.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) v.emplace_back(c.num() * poly_divexact(den_n, c.den()));
        return KPoly(std::move(v));
    };
    KPoly num = scale_poly(f.num()), den = scale_poly(f.den());
    Int ng(0), dl(1);
    auto content = [&](const KPoly& p) {
        for (const auto& c : p.coeffs())
            for (const auto& r : c.num().coeffs()) {
                if (r.is_zero()) continue;
                ng = gcd(ng, r.numerator());
                dl = lcm(dl, r.denominator());
            }
    };
    content(num);
    content(den);
    Rational unit(ng, dl);
    if (den.lc().num().lc().is_negative()) unit = -unit;
    auto descale = [&](const KPoly& p) {
        std::vector<QFunc> v;
        v.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) v.emplace_back(c.num() / unit);
        return KPoly(std::move(v));
    };
    return {descale(num), descale(den)};
}

std::string bivar_poly_str(const KPoly& p, const std::string& kv) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const QFunc& cf = p.coeff(i);
        if (cf.is_zero()) continue;
        const QPoly& c = cf.num();
        for (int j = c.degree(); j >= 0; --j) {
            const Rational& r = c.coeff(j);
            if (r.is_zero()) continue;
            Rational a = r.abs();
            if (out.empty()) {
                if (r.is_negative()) out += "-";
            } else {
                out += r.is_negative() ? " - " : " + ";
            }
            std::string mono;
            if (j > 0) {
                mono += "n";
                if (j > 1) mono += "^" + std::to_string(j);
            }
            if (i > 0) {
                if (!mono.empty()) mono += "*";
                mono += kv;
                if (i > 1) mono += "^" + std::to_string(i);
            }
            if (mono.empty())
                out += a.str();
            else if (a.is_one())
                out += mono;
            else
                out += a.str() + "*" + mono;
        }
    }
    return out;
}

}  // namespace

std::string print_ratfunc(const KFunc& f, const std::string& second_var) {
    if (f.is_zero()) return "0";
    BivarInt b = clear_bivar(f);
    std::string num = bivar_poly_str(b.num, second_var);
    if (b.den.degree() == 0 && b.den.coeff(0).is_one()) return "(" + num + ")";
    return "(" + num + ")/(" + bivar_poly_str(b.den, second_var) + ")";
}

KFunc parse_ratfunc(const std::string& text, const std::string& second_var) {
    ExprPtr ast = parse_expr(text);
    std::function<KFunc(const ExprPtr&)> conv = [&](const ExprPtr& e) -> KFunc {
        using K = Expr::Kind;
        switch (e->kind) {
            case K::Number: return KFunc(QFunc(e->number));
            case K::Var:
                if (e->name == "n") return KFunc(kpoly_from_n(QPoly(std::vector<Rational>{0, 1})));
                if (e->name == second_var) return KFunc(KPoly::var());
                throw std::domain_error("parse_ratfunc: unknown variable " + e->name);
            case K::Neg: return -conv(e->args[0]);
            case K::Add: return conv(e->args[0]) + conv(e->args[1]);
            case K::Sub: return conv(e->args[0]) - conv(e->args[1]);
            case K::Mul: return conv(e->args[0]) * conv(e->args[1]);
            case K::Div: return conv(e->args[0]) / conv(e->args[1]);
            case K::Pow: {
                if (e->args[1]->kind != K::Number || !e->args[1]->number.is_integer())
                    throw std::domain_error("parse_ratfunc: non-integer exponent");
                return conv(e->args[0]).pow(e->args[1]->number.to_long());
            }
            default: throw std::domain_error("parse_ratfunc: unsupported node");
        }
    };
    return conv(ast);
}

std::string print_qfunc(const QFunc& f) {
    if (f.is_zero()) return "0";
    auto norm_num = integer_normalize(f.num());
    auto norm_den = integer_normalize(f.den());
    Rational unit = norm_num.unit / norm_den.unit;
    QPoly num = norm_num.primitive * unit;  // fold the rational unit into the numerator
    std::string out = "(" + poly_str(num, "n") + ")";
    if (!(norm_den.primitive.degree() == 0 && norm_den.primitive.coeff(0).is_one()))
        out += "/(" + poly_str(norm_den.primitive, "n") + ")";
    return out;
}

QFunc parse_qfunc(const std::string& text) {
    KFunc f = parse_ratfunc(text, "k");
    if (f.num().degree() > 0 || f.den().degree() > 0)
        throw std::domain_error("parse_qfunc: unexpected second variable");
    return f.num().coeff(0) / f.den().coeff(0);
}

std::optional<std::pair<long, long>> parse_linear_in_n(const std::string& text) {
    try {
        auto lin = to_linform(parse_expr(text));
        if (!lin || lin->k != 0) return std::nullopt;
        return std::make_pair(lin->n, lin->c);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace telescope
