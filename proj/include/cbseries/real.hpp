#ifndef CBSERIES_REAL_HPP
#define CBSERIES_REAL_HPP

// Arbitrary-precision real value. MPFR does the heavy lifting; Real adds RAII,
// value semantics and explicit precision propagation (results carry the larger
// operand precision, so precision decisions stay at the call sites that own a
// PrecisionContext).

#include <mpfr.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

#include "cbseries/precision.hpp"
#include "cbseries/rational.hpp"

namespace cbs {

class Real {
  public:
    explicit Real(mpfr_prec_t bits = 64) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of_ui(unsigned long u, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set_ui(r.v_, u, MPFR_RNDN);
        return r;
    }
    static Real of_si(long s, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set_si(r.v_, s, MPFR_RNDN);
        return r;
    }
    static Real of(const Rational& q, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real of(const BigInt& z, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Normalized scientific form "d.dd…e±XX" with `digits` significant digits;
    // deterministic for a given value and digit count.
    std::string to_string(unsigned digits) const {
        if (digits == 0) digits = 1;
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
        char fmt[32];
        std::snprintf(fmt, sizeof fmt, "%%.%uRe", digits - 1);
        char* out = nullptr;
        mpfr_asprintf(&out, fmt, v_);
        std::string s(out);
        mpfr_free_str(out);
        return s;
    }

    // Positional form for display (scientific only outside %g's range).
    std::string to_display_string(unsigned digits) const {
        if (digits == 0) digits = 1;
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
        char fmt[32];
        std::snprintf(fmt, sizeof fmt, "%%.%uRg", digits);
        char* out = nullptr;
        mpfr_asprintf(&out, fmt, v_);
        std::string s(out);
        mpfr_free_str(out);
        return s;
    }

    friend Real operator+(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    Real& mul_ui(unsigned long u) { mpfr_mul_ui(v_, v_, u, MPFR_RNDN); return *this; }
    Real& div_ui(unsigned long u) { mpfr_div_ui(v_, v_, u, MPFR_RNDN); return *this; }
    Real& mul_si(long s) { mpfr_mul_si(v_, v_, s, MPFR_RNDN); return *this; }
    Real& mul_q(const Rational& q) { mpfr_mul_q(v_, v_, q.get_mpq_t(), MPFR_RNDN); return *this; }
    Real& mul_2si(long e) { mpfr_mul_2si(v_, v_, e, MPFR_RNDN); return *this; }

    friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  private:
    mpfr_t v_;
};

inline Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

inline Real sqrt(const Real& a) {
    if (a.sign() < 0)
        throw std::domain_error("sqrt of negative value " + a.to_string(12));
    Real r(a.prec());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real sqrt_ui(unsigned long u, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_sqrt_ui(r.raw(), u, MPFR_RNDN);
    return r;
}
inline Real ln(const Real& a) {
    if (a.sign() <= 0)
        throw std::domain_error("log of non-positive value " + a.to_string(12));
    Real r(a.prec());
    mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real sin(const Real& a) {
    Real r(a.prec());
    mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real cos(const Real& a) {
    Real r(a.prec());
    mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real cosh(const Real& a) {
    Real r(a.prec());
    mpfr_cosh(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real sinh(const Real& a) {
    Real r(a.prec());
    mpfr_sinh(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real arctan(const Real& a) {
    Real r(a.prec());
    mpfr_atan(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real arcsin(const Real& a) {
    Real one = Real::of_ui(1, a.prec());
    if (abs(a) > one)
        throw std::domain_error("arcsin argument out of [-1,1]: " + a.to_string(12));
    Real r(a.prec());
    mpfr_asin(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real arctanh(const Real& a) {
    Real one = Real::of_ui(1, a.prec());
    if (abs(a) >= one)
        throw std::domain_error("arctanh argument out of (-1,1): " + a.to_string(12));
    Real r(a.prec());
    mpfr_atanh(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real pow_si(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}
inline Real pow_ui(const Real& a, unsigned long e) {
    Real r(a.prec());
    mpfr_pow_ui(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

// |a - b| <= 10^(-digits), the agreement test used by the Ziv-style loops.
inline bool agree_to_digits(const Real& a, const Real& b, unsigned digits) {
    Real d = abs(a - b);
    Real tol(std::max(a.prec(), b.prec()));
    mpfr_set_ui(tol.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(tol.raw(), tol.raw(), -static_cast<long>(digits), MPFR_RNDN);
    return d <= tol;
}

inline Real pow10(long e, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_ui(r.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

enum class Elementary { sqrt_fn, ln_fn, exp_fn, sin_fn, cos_fn, cosh_fn, arctan_fn, arcsin_fn, arctanh_fn };

// Domain-checked elementary function under the agreement policy: evaluate at
// the working precision and again 32 bits higher; both roundings must agree to
// target_digits + 2 before the result is exported.
inline Real elementary(Elementary f, const Real& x, const PrecisionContext& ctx) {
    auto eval_at = [&](mpfr_prec_t bits) -> Real {
        Real a(bits);
        mpfr_set(a.raw(), x.raw(), MPFR_RNDN);
        switch (f) {
            case Elementary::sqrt_fn:    return sqrt(a);
            case Elementary::ln_fn:      return ln(a);
            case Elementary::exp_fn:     return exp(a);
            case Elementary::sin_fn:     return sin(a);
            case Elementary::cos_fn:     return cos(a);
            case Elementary::cosh_fn:    return cosh(a);
            case Elementary::arctan_fn:  return arctan(a);
            case Elementary::arcsin_fn:  return arcsin(a);
            case Elementary::arctanh_fn: return arctanh(a);
        }
        throw std::logic_error("unreachable");
    };
    mpfr_prec_t wb = ctx.working_bits();
    for (unsigned esc = 0; esc < ctx.max_escalations; ++esc, wb += 64) {
        Real lo = eval_at(wb);
        Real hi = eval_at(wb + 32);
        if (agree_to_digits(lo, hi, ctx.target_digits + 2)) return hi;
    }
    throw std::runtime_error("escalation limit exceeded in elementary()");
}

}  // namespace cbs

#endif
