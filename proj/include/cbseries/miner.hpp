#ifndef CBSERIES_MINER_HPP
#define CBSERIES_MINER_HPP

// Conjecture mining for 2F1(2,2;9/2;1/(4k)).
//
// The template a_k + sqrt(4k-1)(b_k arcsin(1/(2 sqrt k)) + c_k arctan(1/
// sqrt(4k-1))) is over-parameterized: arcsin(1/(2 sqrt k)) and
// arctan(1/sqrt(4k-1)) are the same angle (sin t = 1/(2 sqrt k) forces
// tan t = 1/sqrt(4k-1)), so only a_k and the combined s_k = b_k + c_k are
// identifiable. The miner therefore runs PSLQ on the two-element trig basis
// [F, 1, sqrt(4k-1) arctan(1/sqrt(4k-1))], reconstructs rational (a_k, s_k),
// and re-verifies every hit at doubled precision before it is confirmed.

#include <stdexcept>
#include <string>
#include <vector>

#include "cbseries/hyp.hpp"
#include "cbseries/pslq.hpp"
#include "cbseries/precision.hpp"
#include "cbseries/rational.hpp"
#include "cbseries/real.hpp"

namespace cbs {

struct ConjectureFinding {
    unsigned long k = 1;
    bool found = false;
    Rational a;                 // constant term
    Rational s;                 // identifiable combination b_k + c_k
    std::string residual;       // at confirmation precision
    bool confirmed = false;     // re-verified at 2x digits, denominators bounded
    std::string status;         // found | none_below_bound | precision_exhausted | ...
    unsigned long iterations = 0;
};

inline constexpr unsigned long kDenominatorBound = 1000000;

inline ConjectureFinding mine_conjecture(unsigned long k, unsigned digits,
                                         const PrecisionContext& ctx) {
    if (k < 1) throw std::invalid_argument("mine_conjecture needs k >= 1");
    ConjectureFinding out;
    out.k = k;

    PrecisionContext mine_ctx(digits, ctx.guard_digits, ctx.max_escalations);
    ConjectureBasis b = basis(k, mine_ctx);
    std::vector<Real> xs = {b.F, b.one, b.v};

    RelationResult rel = pslq(xs, mine_ctx);
    out.status = to_string(rel.status);
    out.iterations = rel.iterations;
    if (rel.status != RelationResult::Status::found) return out;

    const BigInt& p = rel.coefficients[0];
    const BigInt& q = rel.coefficients[1];
    const BigInt& r = rel.coefficients[2];
    if (p == 0) {
        // degenerate relation without F; not a conjecture instance
        out.status = "degenerate";
        return out;
    }
    out.found = true;
    out.a = make_rational(-q, p);
    out.s = make_rational(-r, p);

    bool denominators_ok = out.a.get_den() <= kDenominatorBound &&
                           out.s.get_den() <= kDenominatorBound;

    // confirmation at doubled precision: the relation must still vanish below
    // 10^-(digits-10)
    PrecisionContext confirm_ctx(2 * digits, ctx.guard_digits, ctx.max_escalations);
    ConjectureBasis b2 = basis(k, confirm_ctx);
    Real resid = Real::of(p, b2.F.prec()) * b2.F + Real::of(q, b2.F.prec()) +
                 Real::of(r, b2.F.prec()) * b2.v;
    resid = abs(resid);
    Real tol = pow10(-(static_cast<long>(digits) - 10), resid.prec());
    out.residual = resid.to_string(3);
    out.confirmed = denominators_ok && resid < tol;
    if (!denominators_ok) out.status = "denominator_bound_exceeded";
    return out;
}

struct DegeneracyRow {
    unsigned long k;
    std::string difference;     // |arcsin(1/(2 sqrt k)) - arctan(1/sqrt(4k-1))|
    bool dependent;             // difference below 10^-(digits-2)
};

// Certifies the exact trig dependence that collapses the 3-coefficient
// template to 2 identifiable coefficients.
inline std::vector<DegeneracyRow> degeneracy_report(unsigned long k_max,
                                                    const PrecisionContext& ctx) {
    if (k_max < 1) throw std::invalid_argument("degeneracy_report needs k_max >= 1");
    std::vector<DegeneracyRow> rows;
    mpfr_prec_t wb = ctx.working_bits(4);
    Real tol = pow10(-(static_cast<long>(ctx.target_digits) - 2), wb);
    for (unsigned long k = 1; k <= k_max; ++k) {
        Real sk2 = sqrt_ui(k, wb);
        sk2.mul_ui(2);
        Real lhs = arcsin(Real::of_ui(1, wb) / sk2);
        Real s4k1 = sqrt_ui(4 * k - 1, wb);
        Real rhs = arctan(Real::of_ui(1, wb) / s4k1);
        Real diff = abs(lhs - rhs);
        rows.push_back({k, diff.to_string(3), diff < tol});
    }
    return rows;
}

}  // namespace cbs

#endif
