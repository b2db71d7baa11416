#ifndef CBSERIES_CATALAN_HPP
#define CBSERIES_CATALAN_HPP

// Catalan's constant G = sum (-1)^n/(2n+1)^2 =~ 0.915965594...
//
// There is no closed form, so "truth" here is cross-method agreement:
//   accelerated_definition  CRVZ acceleration of the defining alternating sum
//   quad_arctan             integral of arctan(x)/x over [0,1]
//   quad_cosh               half the integral of x/cosh(x) over [0,inf)
//   quad_logcos             2 * integral of log(2 cos x) over [0,pi/4]
//   quad_sinx               integral of x/(2 sin x) over [0,pi/2]
//   best                    accelerated_definition checked against quad_arctan

#include <stdexcept>
#include <string>

#include "cbseries/accel.hpp"
#include "cbseries/pi.hpp"
#include "cbseries/precision.hpp"
#include "cbseries/quadrature.hpp"
#include "cbseries/real.hpp"

namespace cbs {

enum class CatalanMethod {
    accelerated_definition,
    quad_arctan,
    quad_cosh,
    quad_logcos,
    quad_sinx,
    best,
};

inline const char* to_string(CatalanMethod m) {
    switch (m) {
        case CatalanMethod::accelerated_definition: return "accelerated_definition";
        case CatalanMethod::quad_arctan:            return "quad_arctan";
        case CatalanMethod::quad_cosh:              return "quad_cosh";
        case CatalanMethod::quad_logcos:            return "quad_logcos";
        case CatalanMethod::quad_sinx:              return "quad_sinx";
        case CatalanMethod::best:                   return "best";
    }
    return "?";
}

inline CatalanMethod catalan_method_from_string(const std::string& s) {
    if (s == "accelerated_definition") return CatalanMethod::accelerated_definition;
    if (s == "quad_arctan") return CatalanMethod::quad_arctan;
    if (s == "quad_cosh") return CatalanMethod::quad_cosh;
    if (s == "quad_logcos") return CatalanMethod::quad_logcos;
    if (s == "quad_sinx") return CatalanMethod::quad_sinx;
    if (s == "best") return CatalanMethod::best;
    throw std::invalid_argument("unknown catalan method: " + s);
}

namespace detail {

// Raw integrands; shared with the integral-identity catalog.
inline Real g_arctan_over_x(const Real& x, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_atan(r.raw(), x.raw(), MPFR_RNDN);
    return r / x;
}
inline Real g_x_over_cosh_half(const Real& x, mpfr_prec_t bits) {
    Real c(bits);
    mpfr_cosh(c.raw(), x.raw(), MPFR_RNDN);
    Real r = x / c;
    r.div_ui(2);
    return r;
}
inline Real g_log_2cos(const Real& x, mpfr_prec_t bits) {
    Real c(bits);
    mpfr_cos(c.raw(), x.raw(), MPFR_RNDN);
    c.mul_ui(2);
    Real r = ln(c);
    r.mul_ui(2);
    return r;
}
inline Real g_x_over_2sin(const Real& x, mpfr_prec_t bits) {
    Real s(bits);
    mpfr_sin(s.raw(), x.raw(), MPFR_RNDN);
    s.mul_ui(2);
    return x / s;
}

inline Real catalan_definition_accelerated(const PrecisionContext& ctx) {
    // ~0.765 digits per CRVZ term; 40 digits from 63 terms.
    mpfr_prec_t wb = ctx.working_bits();
    unsigned n = static_cast<unsigned>((ctx.target_digits + 8) / 0.7655) + 2;
    for (unsigned esc = 0; esc < ctx.max_escalations; ++esc, wb += 64, n += 8) {
        auto a = [](Real& out, unsigned long k) {
            mpfr_set_ui(out.raw(), 2 * k + 1, MPFR_RNDN);
            mpfr_sqr(out.raw(), out.raw(), MPFR_RNDN);
            mpfr_ui_div(out.raw(), 1, out.raw(), MPFR_RNDN);
        };
        Real lo = alternating_chebyshev(a, n, wb);
        Real hi = alternating_chebyshev(a, n + 4, wb + 32);
        if (agree_to_digits(lo, hi, ctx.target_digits + 2)) return hi;
    }
    throw std::runtime_error("escalation limit exceeded computing G (definition)");
}

}  // namespace detail

inline Real catalan(const PrecisionContext& ctx,
                    CatalanMethod method = CatalanMethod::best) {
    switch (method) {
        case CatalanMethod::accelerated_definition:
            return detail::catalan_definition_accelerated(ctx);
        case CatalanMethod::quad_arctan: {
            mpfr_prec_t wb = ctx.working_bits();
            Real a(wb), b(wb);
            mpfr_set_ui(b.raw(), 1, MPFR_RNDN);
            return integrate_tanh_sinh(detail::g_arctan_over_x, a, b, ctx).value;
        }
        case CatalanMethod::quad_cosh:
            return integrate_exp_sinh(detail::g_x_over_cosh_half, ctx).value;
        case CatalanMethod::quad_logcos: {
            mpfr_prec_t wb = ctx.working_bits();
            Real a(wb);
            Real b = pi_const(ctx);
            b.div_ui(4);
            return integrate_tanh_sinh(detail::g_log_2cos, a, b, ctx).value;
        }
        case CatalanMethod::quad_sinx: {
            mpfr_prec_t wb = ctx.working_bits();
            Real a(wb);
            Real b = pi_const(ctx);
            b.div_ui(2);
            return integrate_tanh_sinh(detail::g_x_over_2sin, a, b, ctx).value;
        }
        case CatalanMethod::best: {
            Real acc = detail::catalan_definition_accelerated(ctx);
            Real chk = catalan(ctx, CatalanMethod::quad_arctan);
            if (!agree_to_digits(acc, chk, ctx.target_digits))
                throw std::runtime_error("catalan routes disagree at requested digits");
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace cbs

#endif
