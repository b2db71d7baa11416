#ifndef CBSERIES_INTEGRALS_HPP
#define CBSERIES_INTEGRALS_HPP

// Integral identity catalog. Four representations of Catalan's G, the Wallis
// families I5_n / I6_n for n = 0..10, and the composed integrals IT1/IT2/IT3/
// ICS1 that give the high-precision route to the theorem-level series.
//
// Endpoint notes: nodes never evaluate at an endpoint (see quadrature.hpp);
// x/(2 sin x) and the IT/ICS integrands are evaluated directly since their
// endpoint cancellation only costs absolute error at the guarded working
// precision. The arctanh(cos y) term inside IT2 is computed through the
// half-angle form 0.5*(log(1+cos y) - log(2 sin^2(y/2))), which stays accurate
// at the doubly-exponentially small left-edge abscissae where cos y would
// round to 1.

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbseries/catalan.hpp"
#include "cbseries/expr.hpp"
#include "cbseries/quadrature.hpp"
#include "cbseries/terms.hpp"
#include "cbseries/verification.hpp"

namespace cbs {

struct IntegralIdentity {
    std::string id;
    enum class Interval { unit, quarter_pi, half_pi, positive_axis } interval;
    Integrand f;
    Expr rhs;
    std::string note;
};

namespace detail {

inline Real it1_integrand(const Real& x, mpfr_prec_t bits) {
    // 1 - sin^2 x / 6 - cos x / 2 - x/(2 sin x)
    Real s(bits), c(bits);
    mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
    Real r = Real::of_ui(1, bits);
    Real t = s * s;
    t.div_ui(6);
    r -= t;
    t = c;
    t.div_ui(2);
    r -= t;
    t = s;
    t.mul_ui(2);
    r -= x / t;
    return r;
}

inline Real arctanh_cos_stable(const Real& y, const Real& cos_y, mpfr_prec_t bits) {
    // arctanh(cos y) = 0.5*(log(1+cos y) - log(2 sin^2(y/2))), exact on (0, pi)
    Real half(bits);
    mpfr_div_ui(half.raw(), y.raw(), 2, MPFR_RNDN);
    Real sh = sin(half);
    Real lo = sh * sh;
    lo.mul_ui(2);
    lo = ln(lo);
    Real hi = cos_y + Real::of_ui(1, bits);
    hi = ln(hi);
    Real r = hi - lo;
    r.div_ui(2);
    return r;
}

inline Real it2_integrand(const Real& y, mpfr_prec_t bits) {
    // log2 - 2 + y sin y + 2 cos y - log(sin y) - arctanh(cos y) - sin^2 y / 4
    Real s(bits), c(bits), l2(bits);
    mpfr_sin_cos(s.raw(), c.raw(), y.raw(), MPFR_RNDN);
    mpfr_const_log2(l2.raw(), MPFR_RNDN);
    Real r = l2 - Real::of_ui(2, bits);
    r += y * s;
    Real t = c;
    t.mul_ui(2);
    r += t;
    r -= ln(s);
    r -= arctanh_cos_stable(y, c, bits);
    t = s * s;
    t.div_ui(4);
    r -= t;
    return r;
}

inline Real it3_integrand(const Real& y, mpfr_prec_t bits) {
    // (1/12)(9 cos y + (6 sin^2 y + 3) y / sin y - 2 sin^2 y - 12)
    Real s(bits), c(bits);
    mpfr_sin_cos(s.raw(), c.raw(), y.raw(), MPFR_RNDN);
    Real s2 = s * s;
    Real r = c;
    r.mul_ui(9);
    Real t = s2;
    t.mul_ui(6);
    t += Real::of_ui(3, bits);
    t *= y;
    t /= s;
    r += t;
    t = s2;
    t.mul_ui(2);
    r -= t;
    r -= Real::of_ui(12, bits);
    r.div_ui(12);
    return r;
}

inline Real ics1_integrand(const Real& t_, mpfr_prec_t bits) {
    // ((2 sin^2 t + 1) t - sin t cos t) / (8 sin t)
    Real s(bits), c(bits);
    mpfr_sin_cos(s.raw(), c.raw(), t_.raw(), MPFR_RNDN);
    Real num = s * s;
    num.mul_ui(2);
    num += Real::of_ui(1, bits);
    num *= t_;
    num -= s * c;
    Real den = s;
    den.mul_ui(8);
    return num / den;
}

inline Real sin_pow_integrand(const Real& t, mpfr_prec_t bits, unsigned long e) {
    Real s(bits);
    mpfr_sin(s.raw(), t.raw(), MPFR_RNDN);
    return pow_ui(s, e);
}

}  // namespace detail

inline const std::vector<IntegralIdentity>& integral_catalog() {
    static const std::vector<IntegralIdentity> catalog = [] {
        std::vector<IntegralIdentity> v;
        using I = IntegralIdentity::Interval;
        Expr G = catalan_sym();
        Expr pi = pi_sym();

        v.push_back({"I1", I::unit, detail::g_arctan_over_x, G,
                     "arctan(x)/x; removable endpoint at 0"});
        v.push_back({"I2", I::positive_axis, detail::g_x_over_cosh_half, G,
                     "x/(2 cosh x); exp-sinh"});
        v.push_back({"I3", I::quarter_pi, detail::g_log_2cos, G,
                     "2 log(2 cos x); smooth"});
        v.push_back({"I4", I::half_pi, detail::g_x_over_2sin, G,
                     "x/(2 sin x); removable endpoint at 0"});
        for (unsigned long n = 0; n <= 10; ++n) {
            v.push_back({"I5_" + std::to_string(n), I::half_pi,
                         [n](const Real& t, mpfr_prec_t bits) {
                             return detail::sin_pow_integrand(t, bits, 2 * n);
                         },
                         mul_e({lit(make_rational(central_binom(n),
                                                  BigInt(2) * detail::powz(4, n))),
                                pi}),
                         "Wallis even power"});
            v.push_back({"I6_" + std::to_string(n), I::half_pi,
                         [n](const Real& t, mpfr_prec_t bits) {
                             return detail::sin_pow_integrand(t, bits, 2 * n + 2);
                         },
                         mul_e({lit(make_rational(binom(2 * n + 2, n + 1),
                                                  detail::pow2z(2 * n + 3))),
                                pi}),
                         "Wallis even power, shifted"});
        }
        v.push_back({"IT1", I::half_pi, detail::it1_integrand,
                     add_e({div_e(mul_e({lit(11), pi}), lit(24)), neg_e(lit(1, 2)), neg_e(G)}),
                     "fourth-order zero at 0"});
        v.push_back({"IT2", I::half_pi, detail::it2_integrand,
                     add_e({mul_e({pi, ln_e(lit(2))}), neg_e(pi),
                            neg_e(div_e(pi_sym(), lit(16))), lit(3),
                            neg_e(mul_e({lit(2), G}))}),
                     "log(sin y) and arctanh(cos y) endpoint singularities"});
        v.push_back({"IT3", I::half_pi, detail::it3_integrand,
                     mul_e({lit(1, 12),
                            add_e({lit(15), mul_e({lit(6), G}),
                                   neg_e(div_e(mul_e({lit(13), pi_sym()}), lit(2)))})}),
                     "y/sin y removable at 0"});
        v.push_back({"ICS1", I::half_pi, detail::ics1_integrand,
                     add_e({div_e(G, lit(4)), lit(1, 8)}),
                     "third-order zero at 0"});
        return v;
    }();
    return catalog;
}

inline const IntegralIdentity& integral_identity(const std::string& id) {
    for (const auto& e : integral_catalog())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown integral id: " + id);
}

inline QuadResult integrate(const IntegralIdentity& ii, const PrecisionContext& ctx,
                            int level_cap = 12) {
    mpfr_prec_t wb = ctx.working_bits();
    Real zero(wb);
    switch (ii.interval) {
        case IntegralIdentity::Interval::unit: {
            Real b = Real::of_ui(1, wb);
            return integrate_tanh_sinh(ii.f, zero, b, ctx, level_cap);
        }
        case IntegralIdentity::Interval::quarter_pi: {
            Real b = pi_const(ctx);
            b.div_ui(4);
            return integrate_tanh_sinh(ii.f, zero, b, ctx, level_cap);
        }
        case IntegralIdentity::Interval::half_pi: {
            Real b = pi_const(ctx);
            b.div_ui(2);
            return integrate_tanh_sinh(ii.f, zero, b, ctx, level_cap);
        }
        case IntegralIdentity::Interval::positive_axis:
            return integrate_exp_sinh(ii.f, ctx, level_cap);
    }
    throw std::logic_error("unreachable");
}

inline QuadResult integrate(const std::string& id, const PrecisionContext& ctx,
                            int level_cap = 12) {
    return integrate(integral_identity(id), ctx, level_cap);
}

inline VerificationReport verify_integral(const std::string& id, unsigned digits,
                                          const PrecisionContext& ctx) {
    auto start = std::chrono::steady_clock::now();
    const IntegralIdentity& ii = integral_identity(id);
    PrecisionContext c = ctx.with_digits(digits + 4);
    QuadResult q = integrate(ii, c);
    Real rhs = eval(ii.rhs, c);
    Real diff = abs(q.value - rhs);

    VerificationReport r;
    r.identity_id = id;
    r.strategy = "quadrature";
    r.digits_requested = digits;
    r.lhs_value = q.value.to_string(digits + 2);
    r.rhs_value = rhs.to_string(digits + 2);
    r.abs_diff = diff.to_string(3);
    r.abs_diff_d = diff.to_double();
    r.terms_used = q.evaluations;
    r.status = "verified";
    Real tol = pow10(1 - static_cast<long>(digits), diff.prec());
    r.pass = diff <= tol;
    r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace cbs

#endif
