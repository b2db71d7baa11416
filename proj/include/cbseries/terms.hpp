#ifndef CBSERIES_TERMS_HPP
#define CBSERIES_TERMS_HPP

// Exact term rules for the series catalog. Every summand is a rational
// function of n (and an exact rational x where applicable), so each rule
// supplies
//   eval(n, x)   the n-th summand as an exact rational, from the defining
//                binomial formula, and
//   ratio parts  the integer factorization of t_{n+1}/t_n / x^x_power, with
//                every factor machine-word sized up to the 2e7-term cap.
// Summation applies the ratio with O(1) big-float work per term; eval() is the
// independent route the recurrence is tested against.
//
// Series whose printed summand carries an irrational constant factor (the
// x^{3/2}-type entries) are represented by their rational cofactor; the
// catalog attaches the factored-out scale as a closed-form expression.

#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbseries/rational.hpp"
#include "cbseries/real.hpp"

namespace cbs {

struct RatioParts {
    unsigned long num[4];
    unsigned long den[4];
    int n_num = 0, n_den = 0;
};

struct TermRule {
    const char* id;
    bool uses_x;
    unsigned x_power;   // ratio carries x^x_power
    Rational (*eval)(unsigned long n, const Rational& x);
    void (*parts)(unsigned long n, RatioParts& f);
};

namespace detail {

inline Rational q_of(const BigInt& num, const BigInt& den) { return make_rational(num, den); }

inline BigInt pow2z(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}
inline BigInt powz(unsigned long base, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

// --- term formulas (binomial route) ---

inline Rational t_L1(unsigned long n, const Rational& x) {
    return pow_rational(x, static_cast<unsigned>(n)) / Rational(central_binom(n) * n);
}
inline Rational t_L2(unsigned long n, const Rational& x) {
    return pow_rational(x, static_cast<unsigned>(n)) / Rational(central_binom(n) * (n * n));
}
inline Rational t_L3(unsigned long n, const Rational& x) {
    // rational cofactor of x^{n+3/2}/(n(n+3/2)C): 2 x^n / (n(2n+3)C)
    return Rational(2) * pow_rational(x, static_cast<unsigned>(n)) /
           Rational(central_binom(n) * (n * (2 * n + 3)));
}
inline Rational t_L4(unsigned long n, const Rational& x) {
    return Rational(central_binom(n)) * pow_rational(x, static_cast<unsigned>(2 * n + 2)) /
           Rational(pow2z(2 * n + 1) * ((n + 1) * (2 * n + 3)));
}
inline Rational t_L5p(unsigned long n, const Rational& x) {
    return Rational(central_binom(n)) * pow_rational(x, static_cast<unsigned>(2 * n + 2)) /
           Rational(powz(16, n) * ((n + 1) * (n + 1)) * (2 * n + 1));
}
inline Rational t_L5c(unsigned long n, const Rational& x) {
    return Rational(central_binom(n)) * pow_rational(x, static_cast<unsigned>(2 * n + 2)) /
           Rational(powz(4, n + 1) * ((n + 1) * (n + 1)) * (2 * n + 1));
}
inline Rational t_L6(unsigned long n, const Rational& x) {
    return Rational(central_binom(n)) * pow_rational(x, static_cast<unsigned>(2 * n + 2)) /
           Rational(pow2z(2 * n + 1) * (n + 1) * (2 * n + 1) * (2 * n + 3));
}
inline Rational t_P1(unsigned long n, const Rational& x) {
    return Rational(central_binom(n)) * pow_rational(x, static_cast<unsigned>(2 * n)) /
           Rational(powz(4, n));
}
inline Rational t_P2(unsigned long n, const Rational& x) {
    return Rational(central_binom(n)) * pow_rational(x, static_cast<unsigned>(2 * n + 3)) /
           Rational(powz(4, n) * (2 * n + 3));
}
inline Rational t_P3(unsigned long n, const Rational& x) {
    return Rational(central_binom(n)) * pow_rational(x, static_cast<unsigned>(2 * n + 1)) /
           Rational(powz(4, n) * (2 * n + 1));
}
inline Rational t_P4(unsigned long n, const Rational& x) {
    return Rational(central_binom(n)) * pow_rational(x, static_cast<unsigned>(2 * n + 2)) /
           Rational(powz(4, n) * (2 * n + 1) * (2 * n + 2));
}
inline Rational t_P5(unsigned long n, const Rational& x) {
    return Rational(central_binom(n)) * pow_rational(x, static_cast<unsigned>(2 * n + 2)) /
           Rational(pow2z(2 * n + 1) * (n + 1) * (2 * n + 1));
}
inline Rational t_GF1(unsigned long n, const Rational& x) {
    return Rational(central_binom(n) * (2 * n * n)) *
           pow_rational(x, static_cast<unsigned>(2 * n - 1)) /
           Rational(powz(4, n) * ((2 * n - 1) * (2 * n - 1)) * (2 * n + 1));
}
inline Rational t_T1(unsigned long n, const Rational&) {
    return Rational(central_binom(n) * binom(2 * n + 2, n + 1)) /
           Rational(powz(16, n) * ((n + 1) * (2 * n + 3)));
}
inline Rational t_T2p(unsigned long n, const Rational&) {
    return Rational(central_binom(n) * binom(2 * n + 2, n + 1)) /
           Rational(powz(64, n) * ((n + 1) * (n + 1)) * (2 * n + 1));
}
inline Rational t_T2c(unsigned long n, const Rational&) {
    return Rational(central_binom(n) * binom(2 * n + 2, n + 1)) /
           Rational(powz(16, n) * ((n + 1) * (n + 1)) * (2 * n + 1));
}
inline Rational t_T3(unsigned long n, const Rational&) {
    return Rational(central_binom(n) * binom(2 * n + 2, n + 1)) /
           Rational(powz(16, n) * (n + 1) * (2 * n + 1) * (2 * n + 3));
}
inline Rational t_LS1(unsigned long n, const Rational&) {
    return Rational(pow2z(n)) / Rational(central_binom(n) * n);
}
inline Rational t_LS2(unsigned long n, const Rational&) {
    return Rational(powz(4, n)) / Rational(central_binom(n) * (n * n));
}
inline Rational t_LS3(unsigned long n, const Rational&) {
    return Rational(1) / Rational(central_binom(n) * (n * n) * (n + 2));
}
inline Rational t_LS4(unsigned long n, const Rational&) {
    return Rational(2) / Rational(central_binom(n) * (n * (2 * n + 3)));
}
inline Rational t_LS5(unsigned long n, const Rational&) {
    return Rational(4) / Rational(central_binom(n) * n * (2 * n + 3) * (2 * n + 5));
}
inline Rational t_CS1(unsigned long n, const Rational&) {
    BigInt c = central_binom(n);
    return Rational(c * c * (n * n)) /
           Rational(powz(16, n) * ((2 * n - 1) * (2 * n - 1)) * (2 * n + 1));
}
inline Rational t_H2(unsigned long n, const Rational&) {
    // rational cofactor of 1/(2^{n+3/2} n(n+3/2) C): 2 (1/2)^n / (n(2n+3)C)
    return Rational(2) / Rational(pow2z(n) * central_binom(n) * (n * (2 * n + 3)));
}
inline Rational t_H3(unsigned long n, const Rational&) {
    return Rational(2) / Rational(powz(3, n) * central_binom(n) * (n * (2 * n + 3)));
}

// --- ratio factorizations (x part excluded) ---

inline void p_L1(unsigned long n, RatioParts& f) {
    f.num[0] = n; f.n_num = 1;
    f.den[0] = 2 * (2 * n + 1); f.n_den = 1;
}
inline void p_L2(unsigned long n, RatioParts& f) {
    f.num[0] = n; f.num[1] = n; f.n_num = 2;
    f.den[0] = 2 * (n + 1); f.den[1] = 2 * n + 1; f.n_den = 2;
}
inline void p_L3(unsigned long n, RatioParts& f) {
    f.num[0] = n; f.num[1] = 2 * n + 3; f.n_num = 2;
    f.den[0] = 2 * (2 * n + 1); f.den[1] = 2 * n + 5; f.n_den = 2;
}
inline void p_L4(unsigned long n, RatioParts& f) {
    f.num[0] = 2 * n + 1; f.num[1] = 2 * n + 3; f.n_num = 2;
    f.den[0] = 2 * (n + 2); f.den[1] = 2 * n + 5; f.n_den = 2;
}
inline void p_L5p(unsigned long n, RatioParts& f) {
    f.num[0] = 2 * n + 1; f.num[1] = 2 * n + 1; f.num[2] = n + 1; f.n_num = 3;
    f.den[0] = 8 * (n + 2); f.den[1] = n + 2; f.den[2] = 2 * n + 3; f.n_den = 3;
}
inline void p_L5c(unsigned long n, RatioParts& f) {
    f.num[0] = 2 * n + 1; f.num[1] = 2 * n + 1; f.num[2] = n + 1; f.n_num = 3;
    f.den[0] = 2 * (n + 2); f.den[1] = n + 2; f.den[2] = 2 * n + 3; f.n_den = 3;
}
inline void p_L6(unsigned long n, RatioParts& f) {
    f.num[0] = 2 * n + 1; f.num[1] = 2 * n + 1; f.n_num = 2;
    f.den[0] = 2 * (n + 2); f.den[1] = 2 * n + 5; f.n_den = 2;
}
inline void p_P1(unsigned long n, RatioParts& f) {
    f.num[0] = 2 * n + 1; f.n_num = 1;
    f.den[0] = 2 * (n + 1); f.n_den = 1;
}
inline void p_P2(unsigned long n, RatioParts& f) {
    f.num[0] = 2 * n + 1; f.num[1] = 2 * n + 3; f.n_num = 2;
    f.den[0] = 2 * (n + 1); f.den[1] = 2 * n + 5; f.n_den = 2;
}
inline void p_P3(unsigned long n, RatioParts& f) {
    f.num[0] = 2 * n + 1; f.num[1] = 2 * n + 1; f.n_num = 2;
    f.den[0] = 2 * (n + 1); f.den[1] = 2 * n + 3; f.n_den = 2;
}
inline void p_P4(unsigned long n, RatioParts& f) {
    f.num[0] = 2 * n + 1; f.num[1] = 2 * n + 1; f.n_num = 2;
    f.den[0] = 2 * (2 * n + 3); f.den[1] = n + 2; f.n_den = 2;
}
inline void p_GF1(unsigned long n, RatioParts& f) {
    f.num[0] = n + 1; f.num[1] = 2 * n - 1; f.num[2] = 2 * n - 1; f.n_num = 3;
    f.den[0] = 2 * n * n; f.den[1] = 2 * n + 3; f.n_den = 2;
}
inline void p_T1(unsigned long n, RatioParts& f) {
    f.num[0] = 2 * n + 1; f.num[1] = 2 * n + 3; f.num[2] = 2 * n + 3; f.n_num = 3;
    f.den[0] = 4 * (n + 2); f.den[1] = n + 2; f.den[2] = 2 * n + 5; f.n_den = 3;
}
inline void p_T2p(unsigned long n, RatioParts& f) {
    f.num[0] = 2 * n + 1; f.num[1] = 2 * n + 1; f.num[2] = n + 1; f.n_num = 3;
    f.den[0] = 16 * (n + 2); f.den[1] = n + 2; f.den[2] = n + 2; f.n_den = 3;
}
inline void p_T2c(unsigned long n, RatioParts& f) {
    f.num[0] = 2 * n + 1; f.num[1] = 2 * n + 1; f.num[2] = n + 1; f.n_num = 3;
    f.den[0] = 4 * (n + 2); f.den[1] = n + 2; f.den[2] = n + 2; f.n_den = 3;
}
inline void p_T3(unsigned long n, RatioParts& f) {
    f.num[0] = 2 * n + 1; f.num[1] = 2 * n + 1; f.num[2] = 2 * n + 3; f.n_num = 3;
    f.den[0] = 4 * (n + 2); f.den[1] = n + 2; f.den[2] = 2 * n + 5; f.n_den = 3;
}
inline void p_LS1(unsigned long n, RatioParts& f) {
    f.num[0] = n; f.n_num = 1;
    f.den[0] = 2 * n + 1; f.n_den = 1;
}
inline void p_LS2(unsigned long n, RatioParts& f) {
    f.num[0] = 2 * n * n; f.n_num = 1;
    f.den[0] = n + 1; f.den[1] = 2 * n + 1; f.n_den = 2;
}
inline void p_LS3(unsigned long n, RatioParts& f) {
    f.num[0] = n * n; f.num[1] = n + 2; f.n_num = 2;
    f.den[0] = 2 * (n + 1); f.den[1] = n + 3; f.den[2] = 2 * n + 1; f.n_den = 3;
}
inline void p_LS4(unsigned long n, RatioParts& f) {
    f.num[0] = n; f.num[1] = 2 * n + 3; f.n_num = 2;
    f.den[0] = 2 * (2 * n + 1); f.den[1] = 2 * n + 5; f.n_den = 2;
}
inline void p_LS5(unsigned long n, RatioParts& f) {
    f.num[0] = n; f.num[1] = 2 * n + 3; f.n_num = 2;
    f.den[0] = 2 * (2 * n + 1); f.den[1] = 2 * n + 7; f.n_den = 2;
}
inline void p_CS1(unsigned long n, RatioParts& f) {
    f.num[0] = 2 * n - 1; f.num[1] = 2 * n - 1; f.num[2] = 2 * n + 1; f.n_num = 3;
    f.den[0] = 4 * n; f.den[1] = n; f.den[2] = 2 * n + 3; f.n_den = 3;
}
inline void p_H2(unsigned long n, RatioParts& f) {
    f.num[0] = n; f.num[1] = 2 * n + 3; f.n_num = 2;
    f.den[0] = 4 * (2 * n + 1); f.den[1] = 2 * n + 5; f.n_den = 2;
}
inline void p_H3(unsigned long n, RatioParts& f) {
    f.num[0] = n; f.num[1] = 2 * n + 3; f.n_num = 2;
    f.den[0] = 6 * (2 * n + 1); f.den[1] = 2 * n + 5; f.n_den = 2;
}

}  // namespace detail

inline const std::vector<TermRule>& term_rules() {
    static const std::vector<TermRule> rules = {
        {"L1",  true, 1, detail::t_L1,  detail::p_L1},
        {"L2",  true, 1, detail::t_L2,  detail::p_L2},
        {"L3",  true, 1, detail::t_L3,  detail::p_L3},
        {"L4",  true, 2, detail::t_L4,  detail::p_L4},
        {"L5p", true, 2, detail::t_L5p, detail::p_L5p},
        {"L5c", true, 2, detail::t_L5c, detail::p_L5c},
        {"L6",  true, 2, detail::t_L6,  detail::p_L6},
        {"P1",  true, 2, detail::t_P1,  detail::p_P1},
        {"P2",  true, 2, detail::t_P2,  detail::p_P2},
        {"P3",  true, 2, detail::t_P3,  detail::p_P3},
        {"P4",  true, 2, detail::t_P4,  detail::p_P4},
        {"P5",  true, 2, detail::t_P5,  detail::p_P4},   // identical summand to P4
        {"GF1", true, 2, detail::t_GF1, detail::p_GF1},
        {"T1",  false, 0, detail::t_T1,  detail::p_T1},
        {"T2p", false, 0, detail::t_T2p, detail::p_T2p},
        {"T2c", false, 0, detail::t_T2c, detail::p_T2c},
        {"T3",  false, 0, detail::t_T3,  detail::p_T3},
        {"LS1", false, 0, detail::t_LS1, detail::p_LS1},
        {"LS2", false, 0, detail::t_LS2, detail::p_LS2},
        {"LS3", false, 0, detail::t_LS3, detail::p_LS3},
        {"LS4", false, 0, detail::t_LS4, detail::p_LS4},
        {"LS5", false, 0, detail::t_LS5, detail::p_LS5},
        {"CS1", false, 0, detail::t_CS1, detail::p_CS1},
        {"H2",  false, 0, detail::t_H2,  detail::p_H2},
        {"H3",  false, 0, detail::t_H3,  detail::p_H3},
    };
    return rules;
}

inline const TermRule& term_rule(const std::string& id) {
    for (const auto& r : term_rules())
        if (id == r.id) return r;
    throw std::invalid_argument("unknown series id: " + id);
}

// Exact n-th summand (rational cofactor for scaled entries). The x-domain is
// enforced by the summation layer, not here: the formula itself is total on
// exact rationals, and the term recurrence tests rely on that.
inline Rational term(const std::string& id, unsigned long n, const Rational& x = Rational(0)) {
    const TermRule& r = term_rule(id);
    if (n < 1) throw std::invalid_argument("term index must be >= 1");
    return r.eval(n, x);
}

// Exact t_{n+1}/t_n in reduced form.
inline Rational term_ratio(const std::string& id, unsigned long n, const Rational& x = Rational(0)) {
    const TermRule& r = term_rule(id);
    if (n < 1) throw std::invalid_argument("term index must be >= 1");
    RatioParts f;
    r.parts(n, f);
    BigInt num(1), den(1);
    for (int i = 0; i < f.n_num; ++i) num *= f.num[i];
    for (int i = 0; i < f.n_den; ++i) den *= f.den[i];
    Rational q = make_rational(num, den);
    if (r.x_power) q *= pow_rational(x, r.x_power);
    return q;
}

// In-place fast ratio application for the big summation loops.
class RatioStepper {
  public:
    RatioStepper(const TermRule& r, const Rational& x) : rule_(r) {
        if (r.x_power) {
            Rational xp = pow_rational(x, r.x_power);
            BigInt num = xp.get_num(), den = xp.get_den();
            fast_x_ = num.fits_ulong_p() && den.fits_ulong_p();
            if (fast_x_) {
                xnum_ = num.get_ui();
                xden_ = den.get_ui();
            } else {
                xq_ = xp;
            }
        }
    }

    void step(Real& t, unsigned long n) const {
        RatioParts f;
        rule_.parts(n, f);
        for (int i = 0; i < f.n_num; ++i) t.mul_ui(f.num[i]);
        for (int i = 0; i < f.n_den; ++i) t.div_ui(f.den[i]);
        if (rule_.x_power) {
            if (fast_x_) {
                if (xnum_ != 1) t.mul_ui(xnum_);
                if (xden_ != 1) t.div_ui(xden_);
            } else {
                t.mul_q(xq_);
            }
        }
    }

  private:
    const TermRule& rule_;
    bool fast_x_ = false;
    unsigned long xnum_ = 1, xden_ = 1;
    Rational xq_;
};

}  // namespace cbs

#endif
