#ifndef CBSERIES_PRECISION_HPP
#define CBSERIES_PRECISION_HPP

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace cbs {

// Decimal-digit precision request plus the guard policy used everywhere:
// work at (target + guard) digits, cross-check at +32 bits, escalate a bounded
// number of times, then fail loudly rather than return doubtful digits.
struct PrecisionContext {
    unsigned target_digits   = 30;
    unsigned guard_digits    = 15;
    unsigned max_escalations = 8;

    explicit PrecisionContext(unsigned digits = 30, unsigned guard = 15,
                              unsigned escalations = 8)
        : target_digits(digits), guard_digits(guard), max_escalations(escalations) {
        if (digits == 0) throw std::invalid_argument("target_digits must be positive");
        if (guard == 0) throw std::invalid_argument("guard_digits must be positive");
        if (escalations == 0) throw std::invalid_argument("max_escalations must be positive");
    }

    static mpfr_prec_t bits_for_digits(unsigned digits) {
        // ceil(d * log2(10)) + a limb of slack
        return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
    }

    mpfr_prec_t working_bits() const {
        return bits_for_digits(target_digits + guard_digits);
    }

    mpfr_prec_t working_bits(unsigned extra_digits) const {
        return bits_for_digits(target_digits + guard_digits + extra_digits);
    }

    PrecisionContext with_digits(unsigned digits) const {
        return PrecisionContext(digits, guard_digits, max_escalations);
    }
};

}  // namespace cbs

#endif
