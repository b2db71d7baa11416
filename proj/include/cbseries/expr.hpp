#ifndef CBSERIES_EXPR_HPP
#define CBSERIES_EXPR_HPP

// Small immutable expression tree covering every closed form in the identity
// catalog: rationals, pi, Catalan's G, sqrt/log/arctan/arcsin/arctanh, +, *, /,
// integer powers, negation and a single free variable x. No parser and no
// simplifier; trees are built programmatically and rendered deterministically.

#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbseries/catalan.hpp"
#include "cbseries/pi.hpp"
#include "cbseries/precision.hpp"
#include "cbseries/rational.hpp"
#include "cbseries/real.hpp"

namespace cbs {

enum class ExprKind {
    rational_lit, pi_sym, catalan_sym, var_sym,
    sqrt_op, ln_op, arctan_op, arcsin_op, arctanh_op,
    neg_op, add_op, mul_op, div_op, powint_op,
};

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    ExprKind kind;
    Rational lit;             // rational_lit
    long ipow = 0;            // powint_op
    std::vector<Expr> kids;
};

inline Expr lit(const Rational& q) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::rational_lit;
    n->lit = q;
    return n;
}
inline Expr lit(long p, unsigned long q = 1) { return lit(make_rational(p, q)); }
inline Expr pi_sym() {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::pi_sym;
    return n;
}
inline Expr catalan_sym() {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::catalan_sym;
    return n;
}
inline Expr var_sym() {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::var_sym;
    return n;
}
inline Expr unary(ExprKind k, Expr e) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->kids.push_back(std::move(e));
    return n;
}
inline Expr sqrt_e(Expr e) { return unary(ExprKind::sqrt_op, std::move(e)); }
inline Expr ln_e(Expr e) { return unary(ExprKind::ln_op, std::move(e)); }
inline Expr arctan_e(Expr e) { return unary(ExprKind::arctan_op, std::move(e)); }
inline Expr arcsin_e(Expr e) { return unary(ExprKind::arcsin_op, std::move(e)); }
inline Expr arctanh_e(Expr e) { return unary(ExprKind::arctanh_op, std::move(e)); }
inline Expr neg_e(Expr e) { return unary(ExprKind::neg_op, std::move(e)); }
inline Expr add_e(std::initializer_list<Expr> kids) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::add_op;
    n->kids.assign(kids);
    return n;
}
inline Expr mul_e(std::initializer_list<Expr> kids) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::mul_op;
    n->kids.assign(kids);
    return n;
}
inline Expr div_e(Expr a, Expr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::div_op;
    n->kids.push_back(std::move(a));
    n->kids.push_back(std::move(b));
    return n;
}
inline Expr powint_e(Expr base, long e) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::powint_op;
    n->kids.push_back(std::move(base));
    n->ipow = e;
    return n;
}
inline Expr sub_e(Expr a, Expr b) { return add_e({std::move(a), neg_e(std::move(b))}); }

inline bool contains_var(const Expr& e) {
    if (e->kind == ExprKind::var_sym) return true;
    for (const auto& k : e->kids)
        if (contains_var(k)) return true;
    return false;
}

namespace detail {

inline PrecisionContext context_for_bits(mpfr_prec_t bits) {
    unsigned digits = static_cast<unsigned>(bits / 3.3219280948873623);
    return PrecisionContext(digits > 2 ? digits : 2);
}

inline Real eval_raw(const Expr& e, const Real* x, mpfr_prec_t bits) {
    switch (e->kind) {
        case ExprKind::rational_lit:
            return Real::of(e->lit, bits);
        case ExprKind::pi_sym:
            return pi_const(context_for_bits(bits));
        case ExprKind::catalan_sym:
            return catalan(context_for_bits(bits), CatalanMethod::best);
        case ExprKind::var_sym:
            if (!x) throw std::invalid_argument("expression needs x but none supplied");
            return *x;
        case ExprKind::sqrt_op:
            return sqrt(eval_raw(e->kids[0], x, bits));
        case ExprKind::ln_op:
            return ln(eval_raw(e->kids[0], x, bits));
        case ExprKind::arctan_op:
            return arctan(eval_raw(e->kids[0], x, bits));
        case ExprKind::arcsin_op:
            return arcsin(eval_raw(e->kids[0], x, bits));
        case ExprKind::arctanh_op:
            return arctanh(eval_raw(e->kids[0], x, bits));
        case ExprKind::neg_op:
            return -eval_raw(e->kids[0], x, bits);
        case ExprKind::add_op: {
            Real acc(bits);
            for (const auto& k : e->kids) acc += eval_raw(k, x, bits);
            return acc;
        }
        case ExprKind::mul_op: {
            Real acc = Real::of_ui(1, bits);
            for (const auto& k : e->kids) acc *= eval_raw(k, x, bits);
            return acc;
        }
        case ExprKind::div_op: {
            Real den = eval_raw(e->kids[1], x, bits);
            if (den.is_zero())
                throw std::domain_error("division by zero in closed form");
            return eval_raw(e->kids[0], x, bits) / den;
        }
        case ExprKind::powint_op:
            return pow_si(eval_raw(e->kids[0], x, bits), e->ipow);
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

// Evaluate under the escalation policy: two roundings 32 bits apart must agree
// to target+2 digits before the value is exported.
inline Real eval(const Expr& e, const PrecisionContext& ctx) {
    if (contains_var(e)) throw std::invalid_argument("expression needs x but none supplied");
    mpfr_prec_t wb = ctx.working_bits();
    for (unsigned esc = 0; esc < ctx.max_escalations; ++esc, wb += 64) {
        Real lo = detail::eval_raw(e, nullptr, wb);
        Real hi = detail::eval_raw(e, nullptr, wb + 32);
        if (agree_to_digits(lo, hi, ctx.target_digits + 2)) return hi;
    }
    throw std::runtime_error("escalation limit exceeded in eval()");
}

inline Real eval(const Expr& e, const Real& x, const PrecisionContext& ctx) {
    mpfr_prec_t wb = std::max(ctx.working_bits(), x.prec());
    for (unsigned esc = 0; esc < ctx.max_escalations; ++esc, wb += 64) {
        Real xlo(wb), xhi(wb + 32);
        mpfr_set(xlo.raw(), x.raw(), MPFR_RNDN);
        mpfr_set(xhi.raw(), x.raw(), MPFR_RNDN);
        Real lo = detail::eval_raw(e, &xlo, wb);
        Real hi = detail::eval_raw(e, &xhi, wb + 32);
        if (agree_to_digits(lo, hi, ctx.target_digits + 2)) return hi;
    }
    throw std::runtime_error("escalation limit exceeded in eval()");
}

inline Real eval(const Expr& e, const Rational& x, const PrecisionContext& ctx) {
    mpfr_prec_t wb = ctx.working_bits();
    for (unsigned esc = 0; esc < ctx.max_escalations; ++esc, wb += 64) {
        Real xlo = Real::of(x, wb), xhi = Real::of(x, wb + 32);
        Real lo = detail::eval_raw(e, &xlo, wb);
        Real hi = detail::eval_raw(e, &xhi, wb + 32);
        if (agree_to_digits(lo, hi, ctx.target_digits + 2)) return hi;
    }
    throw std::runtime_error("escalation limit exceeded in eval()");
}

namespace detail {

// Rendering: "+"/"−" spaced at top level, compact inside parentheses;
// multiplication as "·"; functions as name(arg); Unicode π, √ and minus sign.
inline std::string render(const Expr& e, int depth);

inline bool needs_parens_as_factor(const Expr& e) {
    return e->kind == ExprKind::add_op || e->kind == ExprKind::neg_op;
}
inline bool needs_parens_as_denominator(const Expr& e) {
    return e->kind == ExprKind::add_op || e->kind == ExprKind::mul_op ||
           e->kind == ExprKind::div_op || e->kind == ExprKind::neg_op;
}

inline std::string render_wrapped(const Expr& e, int depth, bool parens) {
    if (!parens) return render(e, depth);
    return "(" + render(e, depth + 1) + ")";
}

inline std::string rational_str(const Rational& q) {
    std::string s = q.get_str();
    if (!s.empty() && s[0] == '-') return "−" + s.substr(1);
    return s;
}

inline std::string render(const Expr& e, int depth) {
    const std::string minus = "−";   // −
    const std::string dot = "·";     // ·
    switch (e->kind) {
        case ExprKind::rational_lit:
            return rational_str(e->lit);
        case ExprKind::pi_sym: return "π";
        case ExprKind::catalan_sym: return "G";
        case ExprKind::var_sym: return "x";
        case ExprKind::sqrt_op: return "√(" + render(e->kids[0], depth + 1) + ")";
        case ExprKind::ln_op: return "log(" + render(e->kids[0], depth + 1) + ")";
        case ExprKind::arctan_op: return "arctan(" + render(e->kids[0], depth + 1) + ")";
        case ExprKind::arcsin_op: return "arcsin(" + render(e->kids[0], depth + 1) + ")";
        case ExprKind::arctanh_op: return "arctanh(" + render(e->kids[0], depth + 1) + ")";
        case ExprKind::neg_op:
            return minus + render_wrapped(e->kids[0], depth,
                                          e->kids[0]->kind == ExprKind::add_op);
        case ExprKind::add_op: {
            std::string plus_sep = depth == 0 ? " + " : "+";
            std::string minus_sep = depth == 0 ? (" " + minus + " ") : minus;
            std::string out;
            bool first = true;
            for (const auto& k : e->kids) {
                if (first) {
                    out += render(k, depth);
                    first = false;
                    continue;
                }
                if (k->kind == ExprKind::neg_op) {
                    out += minus_sep + render_wrapped(k->kids[0], depth,
                                                      k->kids[0]->kind == ExprKind::add_op);
                } else if (k->kind == ExprKind::rational_lit && k->lit < 0) {
                    out += minus_sep + Rational(-k->lit).get_str();
                } else {
                    out += plus_sep + render(k, depth);
                }
            }
            return out;
        }
        case ExprKind::mul_op: {
            std::string out;
            bool first = true;
            for (const auto& k : e->kids) {
                if (!first) out += dot;
                out += render_wrapped(k, depth, needs_parens_as_factor(k));
                first = false;
            }
            return out;
        }
        case ExprKind::div_op: {
            std::string num = render_wrapped(e->kids[0], depth,
                                             needs_parens_as_factor(e->kids[0]));
            std::string den = render_wrapped(e->kids[1], depth,
                                             needs_parens_as_denominator(e->kids[1]));
            return num + "/" + den;
        }
        case ExprKind::powint_op: {
            bool parens = e->kids[0]->kind == ExprKind::add_op ||
                          e->kids[0]->kind == ExprKind::mul_op ||
                          e->kids[0]->kind == ExprKind::div_op ||
                          e->kids[0]->kind == ExprKind::neg_op;
            return render_wrapped(e->kids[0], depth, parens) + "^" + std::to_string(e->ipow);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

inline std::string describe(const Expr& e) { return detail::render(e, 0); }

}  // namespace cbs

#endif
