#pragma once

#include "telescope/ore.hpp"
#include "telescope/term.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace telescope {

/// Expression AST for the input grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ['-'] factor | atom [('^'|'**') exponent]
///   atom   := number | name | call | '(' expr ')'
///   call   := ('binomial'|'factorial') '(' expr {',' expr} ')'
/// Variables: n, k (alias j), x. '**' and '^' are interchangeable.
struct Expr {
    enum class Kind { Number, Var, Add, Sub, Mul, Div, Pow, Neg, Call };
    Kind kind;
    Rational number;                                 // Number
    std::string name;                                // Var / Call
    std::vector<std::shared_ptr<const Expr>> args;   // operands
};
using ExprPtr = std::shared_ptr<const Expr>;

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

ExprPtr parse_expr(const std::string& text);

/// Direct AST evaluation with the library's conventions (generalized binomial,
/// factorial only on nonnegative integers); nullopt = undefined.
std::optional<Rational> eval_expr(const ExprPtr& e, const std::map<std::string, Rational>& vars);

/// Parses and classifies a summand/integrand. Presence of x selects the
/// hyperexponential class (shape c(x)*f(x)^n enforced); otherwise a proper
/// term over (n,k). The structured result is cross-checked against direct AST
/// evaluation on a grid of sample points.
std::variant<ProperTerm, HyperexpTerm> parse_term(const std::string& text);

enum class OpStyle { Canonical, Paper };

/// Canonical: the operator alone, "(c_r(n))*N^r + ... + (c_0(n))*N^0" with
/// expanded integer coefficients. Paper: the bracketed pair
/// "[9*(n+1)*(2*n+1) - 2*(3*n+4)*(3*n+2)*N, 2]" with factored coefficients
/// and the unit chosen so the lowest-order coefficient has a positive lead.
std::string print_operator(const OreOp& op, const ClosedForm& rhs, OpStyle style);

OreOp parse_operator(const std::string& text);

/// Deterministic rendering of a closed form (used in artifacts and summaries).
std::string print_closed_form(const ClosedForm& f);

/// Elements of Q(n,v) for v = "k" or "x": canonical single-fraction string
/// with integer bivariate numerator and denominator.
std::string print_ratfunc(const KFunc& f, const std::string& second_var);
KFunc parse_ratfunc(const std::string& text, const std::string& second_var);

std::string print_qfunc(const QFunc& f);
QFunc parse_qfunc(const std::string& text);

/// "n", "2*n", "2*n+1", "5" -> (slope, offset); nullopt when not linear in n.
std::optional<std::pair<long, long>> parse_linear_in_n(const std::string& text);

}  // namespace telescope
