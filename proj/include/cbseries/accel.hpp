#ifndef CBSERIES_ACCEL_HPP
#define CBSERIES_ACCEL_HPP

// Sequence transformations for slowly convergent series.
//
//  - levin_u / wynn_epsilon: heuristic extrapolation of monotone algebraic-
//    decay partial sums. They return an internal consistency estimate (the
//    spread of the last transform orders), not a rigorous bound.
//  - alternating_chebyshev: the Cohen / Rodriguez Villegas / Zagier scheme for
//    alternating series with totally monotone terms; error falls like
//    (3+sqrt8)^-n, about 0.765 decimal digits per term.
//
// References: Levin, Intern. J. Computer Math. 3 (1973); Wynn, MTAC 10 (1956);
// Cohen, Rodriguez Villegas, Zagier, Exp. Math. 9 (2000) 3-12.

#include <functional>
#include <stdexcept>
#include <vector>

#include "cbseries/real.hpp"

namespace cbs {

struct AccelResult {
    Real value;
    Real err_estimate;       // heuristic: successive transform-order spread
    unsigned long terms_used = 0;
};

// Levin u-transform (beta = 1) on terms a_0..a_{M-1} (a_k = k-th series term).
// Order is capped: pushing the transform past ~order 80 trades away the
// working precision through cancellation in the weight recursion.
inline AccelResult levin_u(const std::vector<Real>& terms, mpfr_prec_t bits,
                           unsigned max_order = 64) {
    if (terms.size() < 4) throw std::invalid_argument("levin_u needs >= 4 terms");
    unsigned M = static_cast<unsigned>(terms.size());
    if (max_order > M - 1) max_order = M - 1;

    std::vector<Real> num(max_order + 1, Real(bits)), den(max_order + 1, Real(bits));
    Real s(bits), w(bits), b(bits), tmp(bits);
    Real best(bits), best_err(bits), prev(bits);
    bool have_prev = false, have_best = false;

    mpfr_set_zero(s.raw(), 1);
    for (unsigned n = 0; n <= max_order; ++n) {
        s += terms[n];
        // remainder estimate w_n = (n+1) a_n
        w = terms[n];
        w.mul_ui(n + 1);
        if (w.is_zero()) throw std::invalid_argument("levin_u: zero term");
        mpfr_ui_div(den[n].raw(), 1, w.raw(), MPFR_RNDN);
        num[n] = s * den[n];
        for (unsigned k = 1; k <= n; ++k) {
            unsigned j = n - k;
            // b = (j+1)(j+k)^(k-2) / (j+k+1)^(k-1)
            b = Real::of_ui(j + 1, bits);
            if (k >= 2) {
                tmp = Real::of_ui(j + k, bits);
                b *= pow_ui(tmp, k - 2);
                tmp = Real::of_ui(j + k + 1, bits);
                b /= pow_ui(tmp, k - 1);
            } else {
                b.div_ui(j + 1);   // k=1: b = 1
            }
            num[j] = num[j + 1] - b * num[j];
            den[j] = den[j + 1] - b * den[j];
        }
        if (den[0].is_zero()) continue;
        Real est = num[0] / den[0];
        if (have_prev) {
            Real diff = abs(est - prev);
            if (!have_best || diff < best_err) {
                best = est;
                best_err = diff;
                have_best = true;
            }
        }
        prev = est;
        have_prev = true;
    }
    if (!have_best) throw std::runtime_error("levin_u did not stabilize");
    return {best, best_err, max_order + 1};
}

// Wynn epsilon algorithm on the partial sums of a_0..a_{M-1}.
inline AccelResult wynn_epsilon(const std::vector<Real>& terms, mpfr_prec_t bits) {
    if (terms.size() < 4) throw std::invalid_argument("wynn_epsilon needs >= 4 terms");
    unsigned M = static_cast<unsigned>(terms.size());
    std::vector<Real> e0(M, Real(bits)), e1(M, Real(bits)), e2(M, Real(bits));
    Real s(bits);
    mpfr_set_zero(s.raw(), 1);
    for (unsigned i = 0; i < M; ++i) {
        s += terms[i];
        e1[i] = s;               // eps_0 column = partial sums
    }
    // e0 = eps_{-1} = 0
    Real diff(bits);
    Real best(bits), best_err(bits), prev(bits);
    bool have_best = false, have_prev = false;
    for (unsigned k = 1; k < M; ++k) {
        for (unsigned i = 0; i + 1 < M - (k - 1); ++i) {
            diff = e1[i + 1] - e1[i];
            if (diff.is_zero()) {
                e2[i] = e1[i + 1];  // converged column; keep value
            } else {
                e2[i] = e0[i + 1] + Real::of_ui(1, bits) / diff;
            }
        }
        if (k % 2 == 0) {
            // even columns are the estimates
            Real est = e2[0];
            if (have_prev) {
                Real d = abs(est - prev);
                if (!have_best || d < best_err) {
                    best = est;
                    best_err = d;
                    have_best = true;
                }
            }
            prev = est;
            have_prev = true;
        }
        std::swap(e0, e1);
        std::swap(e1, e2);
    }
    if (!have_best) throw std::runtime_error("wynn_epsilon did not stabilize");
    return {best, best_err, M};
}

// CRVZ acceleration of sum_{k>=0} (-1)^k a_k; `a` yields a_k into out at the
// given precision. n terms give roughly 0.765 n correct decimal digits.
inline Real alternating_chebyshev(const std::function<void(Real& out, unsigned long k)>& a,
                                  unsigned n, mpfr_prec_t bits) {
    Real d(bits), t(bits), b(bits), c(bits), s(bits), ak(bits);
    // d = ((3+sqrt8)^n + (3+sqrt8)^-n)/2
    t = sqrt_ui(8, bits);
    mpfr_add_ui(t.raw(), t.raw(), 3, MPFR_RNDN);
    d = pow_ui(t, n);
    Real inv = Real::of_ui(1, bits) / d;
    d += inv;
    d.div_ui(2);
    b = Real::of_si(-1, bits);
    c = -d;
    mpfr_set_zero(s.raw(), 1);
    for (unsigned long k = 0; k < n; ++k) {
        c = b - c;
        a(ak, k);
        s += c * ak;
        // b <- (k+n)(k-n) b / ((k+1/2)(k+1)) = 2(k+n)(k-n) b / ((2k+1)(k+1))
        b.mul_ui(2 * (k + n));
        b.mul_si(static_cast<long>(k) - static_cast<long>(n));
        b.div_ui(2 * k + 1);
        b.div_ui(k + 1);
    }
    return s / d;
}

}  // namespace cbs

#endif
