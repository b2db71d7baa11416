#ifndef CBSERIES_REPORT_HPP
#define CBSERIES_REPORT_HPP

// Run-level reporting: aggregates VerificationReports, renders them as JSON
// (stable key order, deterministic except for the wall_time/elapsed fields)
// or as a markdown table.

#include <json.hpp>

#include <string>
#include <vector>

#include "cbseries/series.hpp"
#include "cbseries/verification.hpp"
#include "cbseries/version.hpp"

namespace cbs {

using Json = nlohmann::ordered_json;

struct RunReport {
    std::string tool_version = CBSERIES_VERSION;
    std::string command;
    std::vector<VerificationReport> items;
    double wall_time = 0.0;

    unsigned passed() const {
        unsigned n = 0;
        for (const auto& r : items)
            if (r.status != "erratum" && r.pass) ++n;
        return n;
    }
    unsigned failed() const {
        unsigned n = 0;
        for (const auto& r : items)
            if (!r.as_expected()) ++n;
        return n;
    }
    unsigned errata_confirmed() const {
        unsigned n = 0;
        for (const auto& r : items)
            if (r.status == "erratum" && r.as_expected()) ++n;
        return n;
    }
    bool all_as_expected() const {
        for (const auto& r : items)
            if (!r.as_expected()) return false;
        return true;
    }
};

inline Json to_json(const VerificationReport& r) {
    Json j;
    j["identity_id"] = r.identity_id;
    if (r.x) j["x"] = to_string(*r.x); else j["x"] = nullptr;
    j["strategy"] = r.strategy;
    j["lhs_value"] = r.lhs_value;
    j["rhs_value"] = r.rhs_value;
    j["abs_diff"] = r.abs_diff;
    j["digits_requested"] = r.digits_requested;
    j["pass"] = r.pass;
    j["terms_used"] = r.terms_used;
    j["elapsed"] = r.elapsed;
    j["status"] = r.status;
    if (r.expected_discrepancy) {
        j["expected_discrepancy"] = Json::array(
            {r.expected_discrepancy->first, r.expected_discrepancy->second});
    } else {
        j["expected_discrepancy"] = nullptr;
    }
    j["as_expected"] = r.as_expected();
    return j;
}

inline Json to_json(const RunReport& rep) {
    Json j;
    j["tool_version"] = rep.tool_version;
    j["command"] = rep.command;
    Json items = Json::array();
    for (const auto& r : rep.items) items.push_back(to_json(r));
    j["items"] = items;
    j["summary"] = Json{{"passed", rep.passed()},
                        {"failed", rep.failed()},
                        {"errata_confirmed", rep.errata_confirmed()}};
    j["wall_time"] = rep.wall_time;
    return j;
}

inline std::string to_markdown(const RunReport& rep) {
    std::string md;
    md += "| identity | x | strategy | digits | abs_diff | pass | status |\n";
    md += "|---|---|---|---|---|---|---|\n";
    for (const auto& r : rep.items) {
        md += "| " + r.identity_id;
        md += " | " + (r.x ? to_string(*r.x) : std::string("-"));
        md += " | " + r.strategy;
        md += " | " + std::to_string(r.digits_requested);
        md += " | " + r.abs_diff;
        md += " | " + std::string(r.pass ? "yes" : "no");
        md += " | " + r.status + (r.status == "erratum"
                                      ? (r.as_expected() ? " (confirmed)" : " (UNEXPECTED)")
                                      : "");
        md += " |\n";
    }
    md += "\npassed " + std::to_string(rep.passed()) +
          ", failed " + std::to_string(rep.failed()) +
          ", errata confirmed " + std::to_string(rep.errata_confirmed()) + "\n";
    return md;
}

// Catalog listings.
inline Json catalog_json() {
    Json j;
    Json series = Json::array();
    for (const auto& s : catalog()) {
        Json e;
        e["id"] = s.id;
        e["kind"] = "series";
        if (s.uses_x) {
            e["x_domain"] = std::string(s.min_open ? "(" : "[") + to_string(s.x_min) + ", " +
                            to_string(s.x_max) + (s.max_open ? ")" : "]");
        } else {
            e["x_domain"] = nullptr;
        }
        if (s.algebraic) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "algebraic(p=%g)", s.p);
            e["decay"] = buf;
        } else if (s.uses_x) {
            std::string b = to_string(s.geom_coeff);
            e["decay"] = "geometric(" + b + "*x^" + std::to_string(s.rule->x_power) + ")";
        } else {
            e["decay"] = "geometric(" + to_string(s.geom_coeff) + ")";
        }
        Json strat = Json::array();
        for (auto st : s.strategies) strat.push_back(to_string(st));
        e["strategies"] = strat;
        e["status"] = s.status;
        e["rhs"] = describe(s.rhs);
        if (s.lhs_scale) e["lhs_scale"] = describe(s.lhs_scale);
        if (!s.note.empty()) e["note"] = s.note;
        series.push_back(e);
    }
    j["series"] = series;
    Json integrals = Json::array();
    for (const auto& ii : integral_catalog()) {
        Json e;
        e["id"] = ii.id;
        e["kind"] = "integral";
        switch (ii.interval) {
            case IntegralIdentity::Interval::unit: e["interval"] = "[0, 1]"; break;
            case IntegralIdentity::Interval::quarter_pi: e["interval"] = "[0, pi/4]"; break;
            case IntegralIdentity::Interval::half_pi: e["interval"] = "[0, pi/2]"; break;
            case IntegralIdentity::Interval::positive_axis: e["interval"] = "[0, inf)"; break;
        }
        e["rhs"] = describe(ii.rhs);
        e["status"] = "verified";
        if (!ii.note.empty()) e["note"] = ii.note;
        integrals.push_back(e);
    }
    j["integrals"] = integrals;
    return j;
}

inline std::string catalog_markdown() {
    Json j = catalog_json();
    std::string md;
    md += "| id | kind | domain/interval | decay | strategies | status | rhs |\n";
    md += "|---|---|---|---|---|---|---|\n";
    for (const auto& e : j["series"]) {
        std::string strategies;
        for (const auto& s : e["strategies"]) {
            if (!strategies.empty()) strategies += ",";
            strategies += s.get<std::string>();
        }
        md += "| " + e["id"].get<std::string>() + " | series | " +
              (e["x_domain"].is_null() ? std::string("-") : e["x_domain"].get<std::string>()) +
              " | " + e["decay"].get<std::string>() + " | " + strategies + " | " +
              e["status"].get<std::string>() + " | " + e["rhs"].get<std::string>() + " |\n";
    }
    for (const auto& e : j["integrals"]) {
        md += "| " + e["id"].get<std::string>() + " | integral | " +
              e["interval"].get<std::string>() + " | - | quadrature | verified | " +
              e["rhs"].get<std::string>() + " |\n";
    }
    return md;
}

}  // namespace cbs

#endif
