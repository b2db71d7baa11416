#ifndef CBSERIES_QUADRATURE_HPP
#define CBSERIES_QUADRATURE_HPP

// Double-exponential quadrature: tanh-sinh on finite intervals, exp-sinh on
// [0, inf). The trapezoid step is halved per level; each level reuses the
// previous nodes, the successive-level difference is the error estimate, and
// the whole integration is repeated 32 bits higher until both roundings agree
// (the same agreement policy the rest of the library uses).
//
// Nodes are generated from the transform's complement so an endpoint is never
// evaluated exactly: near b the node is written b - d with d computed as
// half*(1 - tanh u) = half * 2 e^{-2u}/(1+e^{-2u}), which stays accurate when
// d underflows the working precision's distance from b.
//
// References: Takahasi & Mori, Publ. RIMS 9 (1974); Bailey, Jeyabalan, Li,
// Exp. Math. 14 (2005) 317-329.

#include <cmath>
#include <functional>
#include <vector>
#include <stdexcept>

#include "cbseries/pi.hpp"
#include "cbseries/precision.hpp"
#include "cbseries/real.hpp"

namespace cbs {

using Integrand = std::function<Real(const Real& x, mpfr_prec_t bits)>;

struct QuadResult {
    Real value;
    Real err_estimate;        // last successive-level difference
    int levels = 0;
    unsigned long evaluations = 0;
};

namespace detail {

struct DeOptions {
    int level_cap = 12;
    long k_cap = 3000000;     // absolute guard on nodes per level
    std::vector<double>* trace_log10_diff = nullptr;  // per-level log10 |delta|
};

// One full tanh-sinh run at fixed precision. `digits` controls the stopping
// threshold 10^(-digits-2); tail summation on each side stops after three
// consecutive transformed terms below threshold/1024.
inline QuadResult tanh_sinh_run(const Integrand& f, const Real& a, const Real& b,
                                unsigned digits, mpfr_prec_t bits, const DeOptions& opt) {
    Real pi = detail::pi_route_machin(bits + 16);
    Real pi2(bits);
    mpfr_set(pi2.raw(), pi.raw(), MPFR_RNDN);
    pi2.div_ui(2);

    Real mid = a + b;  mid.div_ui(2);
    Real half = b - a; half.div_ui(2);

    Real thresh = pow10(-static_cast<long>(digits) - 2, bits);
    Real term_floor = thresh;
    term_floor.mul_2si(-10);

    unsigned long evals = 0;

    Real sh(bits), ch(bits), u(bits), au(bits), e2(bits), den(bits), dist(bits);
    Real x(bits), wt(bits), fx(bits), contrib(bits), emx(bits), epx(bits);

    auto node = [&](const Real& t) -> Real {
        // returns weighted contribution f(x(t)) * w(t)
        mpfr_sinh_cosh(sh.raw(), ch.raw(), t.raw(), MPFR_RNDN);
        u = pi2 * sh;
        au = abs(u);
        e2 = au; e2.mul_si(-2);
        e2 = exp(e2);                        // e^{-2|u|}
        den = e2; mpfr_add_ui(den.raw(), den.raw(), 1, MPFR_RNDN);
        dist = e2; dist.mul_ui(2); dist /= den;   // 1 - |tanh u|
        dist *= half;
        if (u.sign() >= 0) x = b - dist; else x = a + dist;
        // cosh u from e^{|u|}
        epx = exp(au);
        emx = Real::of_ui(1, bits) / epx;
        Real chu = epx + emx; chu.div_ui(2);
        wt = pi2 * ch;
        wt /= chu * chu;
        fx = f(x, bits);
        if (fx.is_nan() || fx.is_inf())
            throw std::runtime_error("integrand returned NaN/Inf near x = " + x.to_string(12));
        ++evals;
        return fx * wt;
    };

    Real h = Real::of_ui(1, bits);
    Real t(bits), sum(bits), acc(bits), mag(bits);

    mpfr_set_zero(t.raw(), 1);
    sum = node(t);
    for (int side = 0; side < 2; ++side) {
        int low = 0;
        for (long k = 1; k <= opt.k_cap && low < 3; ++k) {
            mpfr_set_si(t.raw(), side ? -k : k, MPFR_RNDN);
            contrib = node(t);
            sum += contrib;
            mag = abs(contrib);
            if (mag < term_floor) ++low; else low = 0;
        }
    }
    // integral estimate at level 0 (h = 1)
    Real estimate = sum;      // times h (=1)

    QuadResult out;
    out.value = estimate * half;
    out.err_estimate = abs(estimate);  // placeholder until level 1
    Real prev(bits);
    int lvl = 1;
    for (; lvl <= opt.level_cap; ++lvl) {
        prev = estimate;
        h.div_ui(2);
        mpfr_set_zero(acc.raw(), 1);
        for (int side = 0; side < 2; ++side) {
            int low = 0;
            for (long k = 1; k <= opt.k_cap && low < 3; k += 2) {
                t = h;
                t.mul_si(side ? -k : k);
                contrib = node(t);
                acc += contrib;
                mag = abs(contrib);
                if (mag < term_floor) ++low; else low = 0;
            }
        }
        // I_new = I_old/2 + h_new * sum(odd nodes); we track estimate = I/h0
        estimate.div_ui(2);
        estimate += acc * h;
        Real diff = abs(estimate - prev);
        out.err_estimate = diff * half;
        if (opt.trace_log10_diff) {
            double d = diff.to_double();
            opt.trace_log10_diff->push_back(
                d > 0 ? std::log10(d) : -static_cast<double>(bits));
        }
        if (lvl >= 3 && diff <= thresh) { ++lvl; break; }
    }
    out.levels = lvl - 1;
    out.evaluations = evals;
    out.value = estimate * half;
    if (out.err_estimate > thresh * half && out.levels >= opt.level_cap)
        throw std::runtime_error("tanh-sinh did not converge by level cap");
    return out;
}

// exp-sinh on [0, inf): x = exp(pi/2 sinh t). Side stop thresholds guarantee
// the raw integrand at the last abscissa is below threshold as well, since the
// weight x * pi/2 * cosh t exceeds 1 wherever truncation can trigger.
inline QuadResult exp_sinh_run(const Integrand& f, unsigned digits, mpfr_prec_t bits,
                               const DeOptions& opt) {
    Real pi = detail::pi_route_machin(bits + 16);
    Real pi2(bits);
    mpfr_set(pi2.raw(), pi.raw(), MPFR_RNDN);
    pi2.div_ui(2);

    Real thresh = pow10(-static_cast<long>(digits) - 2, bits);
    Real term_floor = thresh;
    term_floor.mul_2si(-10);

    unsigned long evals = 0;
    Real sh(bits), ch(bits), x(bits), fx(bits), wt(bits);

    auto node = [&](const Real& t) -> Real {
        mpfr_sinh_cosh(sh.raw(), ch.raw(), t.raw(), MPFR_RNDN);
        x = pi2 * sh;
        x = exp(x);
        wt = x * pi2 * ch;
        fx = f(x, bits);
        if (fx.is_nan() || fx.is_inf())
            throw std::runtime_error("integrand returned NaN/Inf near x = " + x.to_string(12));
        ++evals;
        return fx * wt;
    };

    Real h = Real::of_ui(1, bits);
    Real t(bits), sum(bits), acc(bits), mag(bits), contrib(bits);
    mpfr_set_zero(t.raw(), 1);
    sum = node(t);
    for (int side = 0; side < 2; ++side) {
        int low = 0;
        for (long k = 1; k <= opt.k_cap && low < 3; ++k) {
            mpfr_set_si(t.raw(), side ? -k : k, MPFR_RNDN);
            contrib = node(t);
            sum += contrib;
            mag = abs(contrib);
            if (mag < term_floor) ++low; else low = 0;
        }
    }
    Real estimate = sum;
    QuadResult out;
    Real prev(bits);
    int lvl = 1;
    for (; lvl <= opt.level_cap; ++lvl) {
        prev = estimate;
        h.div_ui(2);
        mpfr_set_zero(acc.raw(), 1);
        for (int side = 0; side < 2; ++side) {
            int low = 0;
            for (long k = 1; k <= opt.k_cap && low < 3; k += 2) {
                t = h;
                t.mul_si(side ? -k : k);
                contrib = node(t);
                acc += contrib;
                mag = abs(contrib);
                if (mag < term_floor) ++low; else low = 0;
            }
        }
        estimate.div_ui(2);
        estimate += acc * h;
        Real diff = abs(estimate - prev);
        out.err_estimate = diff;
        if (lvl >= 3 && diff <= thresh) { ++lvl; break; }
    }
    out.levels = lvl - 1;
    out.evaluations = evals;
    out.value = estimate;
    if (out.err_estimate > thresh && out.levels >= opt.level_cap)
        throw std::runtime_error("exp-sinh did not converge by level cap");
    return out;
}

}  // namespace detail

// Finite-interval DE integration under the two-precision agreement policy.
inline QuadResult integrate_tanh_sinh(const Integrand& f, const Real& a, const Real& b,
                                      const PrecisionContext& ctx, int level_cap = 12) {
    detail::DeOptions opt;
    opt.level_cap = level_cap;
    unsigned digits = ctx.target_digits;
    mpfr_prec_t wb = PrecisionContext::bits_for_digits(digits + 10);
    for (unsigned esc = 0; esc < ctx.max_escalations; ++esc, wb += 64) {
        QuadResult lo = detail::tanh_sinh_run(f, a, b, digits, wb, opt);
        QuadResult hi = detail::tanh_sinh_run(f, a, b, digits, wb + 32, opt);
        if (agree_to_digits(lo.value, hi.value, digits + 2)) {
            hi.evaluations += lo.evaluations;
            return hi;
        }
    }
    throw std::runtime_error("escalation limit exceeded in integrate_tanh_sinh");
}

inline QuadResult integrate_exp_sinh(const Integrand& f, const PrecisionContext& ctx,
                                     int level_cap = 12) {
    detail::DeOptions opt;
    opt.level_cap = level_cap;
    unsigned digits = ctx.target_digits;
    mpfr_prec_t wb = PrecisionContext::bits_for_digits(digits + 10);
    for (unsigned esc = 0; esc < ctx.max_escalations; ++esc, wb += 64) {
        QuadResult lo = detail::exp_sinh_run(f, digits, wb, opt);
        QuadResult hi = detail::exp_sinh_run(f, digits, wb + 32, opt);
        if (agree_to_digits(lo.value, hi.value, digits + 2)) {
            hi.evaluations += lo.evaluations;
            return hi;
        }
    }
    throw std::runtime_error("escalation limit exceeded in integrate_exp_sinh");
}

}  // namespace cbs

#endif
