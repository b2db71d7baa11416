#ifndef CBSERIES_RATIONAL_HPP
#define CBSERIES_RATIONAL_HPP

// Exact integer/rational layer. GMP supplies the arbitrary-size arithmetic;
// everything here is a thin veneer that keeps values canonical (lowest terms,
// positive denominator) and adds the binomial helpers the series layer needs.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cbs {

using BigInt   = mpz_class;
using Rational = mpq_class;   // mpq_class keeps results canonical under + - * /

inline BigInt binom(unsigned long n, unsigned long m) {
    if (m > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, m);
    return r;
}

inline BigInt central_binom(unsigned long n) {
    return binom(2 * n, n);
}

inline Rational make_rational(long num, unsigned long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q" with decimal integer p, q.  Anything else (in
// particular decimal points) is rejected so evaluation points stay exact.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = s.find('/');
    auto check_int = [&](const std::string& part, bool allow_sign) {
        if (part.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (part[0] == '+' || part[0] == '-')) i = 1;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!check_int(s, true))
            throw std::invalid_argument("not an exact rational: '" + s + "'");
        Rational q(s);
        q.canonicalize();
        return q;
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!check_int(num, true) || !check_int(den, false))
        throw std::invalid_argument("not an exact rational: '" + s + "'");
    Rational q(s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// x^e for small non-negative exponents.
inline Rational pow_rational(const Rational& x, unsigned e) {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace cbs

#endif
