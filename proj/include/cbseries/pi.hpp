#ifndef CBSERIES_PI_HPP
#define CBSERIES_PI_HPP

// pi from two Machin-type arctan decompositions evaluated by our own Taylor
// series (never mpfr's atan, so the two routes plus the library constant stay
// mutually independent checks):
//
//   route A:  pi = 16 arctan(1/5) - 4 arctan(1/239)       (Machin)
//   route B:  pi =  4 arctan(1/2) + 4 arctan(1/3)         (Euler)
//
// Both are computed at working precision and must agree to target+2 digits.

#include <stdexcept>

#include "cbseries/precision.hpp"
#include "cbseries/real.hpp"

namespace cbs {

namespace detail {

// arctan(1/m) = sum_{j>=0} (-1)^j / ((2j+1) m^(2j+1)); alternating with
// decreasing terms, so the truncation error is below the first omitted term.
inline Real arctan_inv_ui(unsigned long m, mpfr_prec_t bits) {
    Real p = Real::of_ui(1, bits);
    p.div_ui(m);                       // 1/m
    Real term = p;
    Real acc(bits);
    unsigned long m2 = m * m;          // m <= 239, no overflow
    bool sub = true;
    Real contrib(bits);
    for (unsigned long j = 1;; ++j) {
        mpfr_div_ui(p.raw(), p.raw(), m2, MPFR_RNDN);
        mpfr_div_ui(contrib.raw(), p.raw(), 2 * j + 1, MPFR_RNDN);
        if (j == 1) {
            acc = term;
        }
        if (sub) acc -= contrib; else acc += contrib;
        sub = !sub;
        // stop once p / (2j+3) is below one ulp of acc
        if (mpfr_get_exp(p.raw()) < mpfr_get_exp(acc.raw()) - static_cast<long>(bits) - 4)
            break;
    }
    return acc;
}

inline Real pi_route_machin(mpfr_prec_t bits) {
    Real a = arctan_inv_ui(5, bits);
    a.mul_ui(16);
    Real b = arctan_inv_ui(239, bits);
    b.mul_ui(4);
    return a - b;
}

inline Real pi_route_euler(mpfr_prec_t bits) {
    Real a = arctan_inv_ui(2, bits);
    Real b = arctan_inv_ui(3, bits);
    Real s = a + b;
    s.mul_ui(4);
    return s;
}

}  // namespace detail

inline Real pi_const(const PrecisionContext& ctx) {
    mpfr_prec_t wb = ctx.working_bits();
    for (unsigned esc = 0; esc < ctx.max_escalations; ++esc, wb += 64) {
        Real a = detail::pi_route_machin(wb);
        Real b = detail::pi_route_euler(wb);
        if (agree_to_digits(a, b, ctx.target_digits + 2)) return a;
    }
    throw std::runtime_error("escalation limit exceeded computing pi");
}

}  // namespace cbs

#endif
