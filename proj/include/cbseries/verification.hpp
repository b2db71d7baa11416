#ifndef CBSERIES_VERIFICATION_HPP
#define CBSERIES_VERIFICATION_HPP

#include <optional>
#include <string>
#include <utility>

#include "cbseries/rational.hpp"

namespace cbs {

// One verified (identity, x, strategy) triple. Values are carried as decimal
// strings so reports are deterministic byte-for-byte; elapsed is the only
// nondeterministic field.
struct VerificationReport {
    std::string identity_id;
    std::optional<Rational> x;
    std::string strategy;            // direct | accel | quadrature
    std::string lhs_value;
    std::string rhs_value;
    std::string abs_diff;
    double abs_diff_d = 0.0;
    unsigned digits_requested = 0;
    bool pass = false;
    unsigned long terms_used = 0;
    double elapsed = 0.0;            // seconds
    std::string status;              // verified | erratum
    std::optional<std::pair<double, double>> expected_discrepancy;

    // An erratum row "succeeds" by failing inside its expected band.
    bool as_expected() const {
        if (status != "erratum") return pass;
        if (pass) return false;
        if (!expected_discrepancy) return true;
        return abs_diff_d >= expected_discrepancy->first &&
               abs_diff_d <= expected_discrepancy->second;
    }
};

}  // namespace cbs

#endif
