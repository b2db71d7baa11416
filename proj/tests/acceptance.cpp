// Acceptance suite: one check per shipped claim, one PASS/FAIL line each,
// nonzero exit if anything fails. Criteria cover the constant routes, the
// full identity catalog at its stated digit goals and tolerances, the errata,
// the endpoint series, the hypergeometric values, the relation miner, the
// Wallis family and the cross-cutting soundness properties.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cbseries/catalan.hpp"
#include "cbseries/hyp.hpp"
#include "cbseries/miner.hpp"
#include "cbseries/report.hpp"
#include "cbseries/series.hpp"

using namespace cbs;

namespace {

int failures = 0;

void report_line(int criterion, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct CmdResult {
    int exit_code;
    std::string output;
};

CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(CBSERIES_BIN) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    while (std::fgets(buf.data(), buf.size(), p)) out += buf.data();
    int rc = pclose(p);
    return {WEXITSTATUS(rc), out};
}

// --- criterion 1: G by five routes, pairwise <= 1e-38 at 40 digits, <= 10 s
void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    PrecisionContext ctx(40);
    std::vector<std::pair<std::string, Real>> vals;
    vals.emplace_back("accel_def", catalan(ctx, CatalanMethod::accelerated_definition));
    for (const char* id : {"I1", "I2", "I3", "I4"})
        vals.emplace_back(id, integrate(id, ctx).value);
    double worst = 0;
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j)
            worst = std::max(worst, abs(vals[i].second - vals[j].second).to_double());
    // first six digits of the decimal expansion
    std::string head = vals[0].second.to_string(12).substr(0, 8);  // "9.159655"
    bool digits_ok = head == "9.159655";
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << "Catalan routes pairwise |diff| max " << worst << " (tol 1e-38), head 0."
       << head[0] << head.substr(2, 5) << ", " << dt << " s";
    report_line(1, worst <= 1e-38 && digits_ok && dt <= 10.0, os.str());
}

// --- criterion 2: geometric-decay suite at 30 digits, rigorous, <= 60 s
void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    PrecisionContext ctx(30);
    bool all_ok = true;
    std::string first_bad;
    auto run_direct = [&](const std::string& id, std::optional<Rational> x) {
        VerificationReport r = verify(id, x, 30, Strategy::direct, ctx);
        if (!r.pass) {
            all_ok = false;
            if (first_bad.empty())
                first_bad = id + (x ? "@" + to_string(*x) : "");
        }
    };
    for (const char* id : {"L1", "L2", "L3"})
        for (long x : {1, 2, 3})
            run_direct(id, Rational(x));
    for (const char* id : {"L1", "L2", "L3"}) run_direct(id, make_rational(1, 2));
    for (const char* id : {"L4", "L5c", "L6", "P1", "P2", "P3", "P4", "P5", "GF1"})
        for (auto x : {make_rational(1, 4), make_rational(1, 2), make_rational(9, 10)})
            run_direct(id, x);
    for (const char* id : {"LS1", "LS3", "LS4", "LS5", "H2", "H3"})
        run_direct(id, std::nullopt);
    // T2c decays algebraically (n^-4), so 30 rigorous digits are out of reach
    // of direct summation under the 2e7-term cap; its 30-digit route is the
    // IT2 quadrature delegation, with direct summation checked at its 20-digit
    // rigorous cap.
    VerificationReport t2c_quad = verify("T2c", std::nullopt, 30, Strategy::quadrature, ctx);
    VerificationReport t2c_dir =
        verify("T2c", std::nullopt, 20, Strategy::direct, PrecisionContext(20));
    if (!t2c_quad.pass || !t2c_dir.pass) {
        all_ok = false;
        if (first_bad.empty()) first_bad = "T2c";
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << "geometric suite at 30 digits (45 direct rows; T2c via quadrature at 30 + direct "
          "at cap 20)"
       << (first_bad.empty() ? "" : ", first failure " + first_bad) << ", " << dt << " s";
    report_line(2, all_ok && dt <= 60.0, os.str());
}

// --- criterion 3: T1/T3 direct at 12 + quadrature at 30; CS1 at 6 + 30
void criterion_3() {
    bool ok = true;
    std::ostringstream os;
    auto check = [&](const char* id, unsigned digits, Strategy st) {
        VerificationReport r =
            verify(id, std::nullopt, digits, st, PrecisionContext(digits));
        bool this_ok = r.pass && r.terms_used <= 20000000;
        ok = ok && this_ok;
        os << id << "/" << to_string(st) << "@" << digits << (this_ok ? " ok" : " FAIL")
           << " (" << r.terms_used << " terms) ";
    };
    check("T1", 12, Strategy::direct);
    check("T3", 12, Strategy::direct);
    check("T1", 30, Strategy::quadrature);
    check("T3", 30, Strategy::quadrature);
    check("CS1", 6, Strategy::direct);
    check("CS1", 30, Strategy::quadrature);
    report_line(3, ok, os.str());
}

// --- criterion 4: errata bands + corrected variants + full 12-digit run
void criterion_4() {
    PrecisionContext ctx(6);
    VerificationReport t2p = verify("T2p", std::nullopt, 6, Strategy::direct, ctx);
    bool t2p_ok = !t2p.pass && t2p.abs_diff_d >= 3.0e-3 && t2p.abs_diff_d <= 3.7e-3;
    VerificationReport l5p = verify("L5p", Rational(1), 6, Strategy::direct, ctx);
    bool l5p_ok = !l5p.pass && l5p.abs_diff_d >= 2.7e-3 && l5p.abs_diff_d <= 3.3e-3;

    PrecisionContext c30(30);
    bool corrected_ok = verify("T2c", std::nullopt, 30, Strategy::auto_pick, c30).pass;
    for (auto x : {make_rational(1, 4), make_rational(1, 2), make_rational(9, 10)})
        corrected_ok = corrected_ok && verify("L5c", x, 30, Strategy::direct, c30).pass;

    CmdResult full = run_cli("verify --digits 12");
    bool cli_ok = full.exit_code == 0 &&
                  full.output.find("\"errata_confirmed\": 2") != std::string::npos;

    std::ostringstream os;
    os << "T2p diff " << t2p.abs_diff_d << " in [3.0e-3,3.7e-3]; L5p diff " << l5p.abs_diff_d
       << " in [2.7e-3,3.3e-3]; corrected pass at 30; `verify --digits 12` exit "
       << full.exit_code << " with 2 errata confirmed";
    report_line(4, t2p_ok && l5p_ok && corrected_ok && cli_ok, os.str());
}

// --- criterion 5: LS2 accelerated to pi^2/2, >= 8 digits, <= 200 terms
void criterion_5() {
    PrecisionContext ctx(12);
    PartialSum ps = sum_accelerated("LS2", std::nullopt, ctx, AccelScheme::levin_u);
    Real ref = pi_const(PrecisionContext(40));
    ref = ref * ref;
    ref.div_ui(2);
    double diff = abs(ps.value - ref).to_double();
    std::ostringstream os;
    os << "LS2 levin_u: " << ps.terms_used << " terms, |diff to pi^2/2| = " << diff
       << " (tol 1e-8)";
    report_line(5, ps.terms_used <= 200 && diff <= 1e-8, os.str());
}

// --- criterion 6: hypergeometric printed values and closed forms
void criterion_6() {
    PrecisionContext ctx(30);
    bool ok = true;
    std::ostringstream os;

    HypValue z8 = f21_9half(make_rational(1, 8), ctx);
    Real p8(128);
    mpfr_set_str(p8.raw(), "1.12378", 10, MPFR_RNDN);
    ok = ok && abs(z8.value - p8).to_double() <= 5e-6;

    HypValue z12 = f21_9half(make_rational(1, 12), ctx);
    Real p12(128);
    mpfr_set_str(p12.raw(), "1.0795", 10, MPFR_RNDN);
    ok = ok && abs(z12.value - p12).to_double() <= 5e-5;

    HypValue z4 = f21_9half(make_rational(1, 4), ctx);
    Real v4(128);
    mpfr_set_str(v4.raw(), "1.27947", 10, MPFR_RNDN);
    ok = ok && abs(z4.value - v4).to_double() <= 1e-5;
    Real printed4(128);
    mpfr_set_str(printed4.raw(), "1.2947", 10, MPFR_RNDN);
    bool erratum_flagged = abs(z4.value - printed4).to_double() > 1e-3;
    ok = ok && erratum_flagged;

    double worst_closed = 0;
    for (unsigned long k = 1; k <= 3; ++k) {
        HypValue hv = f21_9half(make_rational(1, 4 * k), ctx);
        Real closed = f21_closed_form_value(k, ctx);
        worst_closed = std::max(worst_closed, abs(hv.value - closed).to_double());
    }
    ok = ok && worst_closed <= 1e-28;

    os << "printed 1.12378/1.0795 reproduced, z=1/4 = " << z4.value.to_string(6)
       << " (printed 1.2947 flagged erratum), closed-form agreement max diff "
       << worst_closed;
    report_line(6, ok, os.str());
}

// --- criterion 7: miner end to end, k = 1..8, <= 60 s
void criterion_7() {
    auto t0 = std::chrono::steady_clock::now();
    PrecisionContext ctx(40);
    mpfr_prec_t wb = ctx.working_bits();
    bool ok = true;
    std::ostringstream os;

    Real one = Real::of_ui(1, wb);
    Real phi = sqrt_ui(5, wb) + one;
    phi.div_ui(2);
    RelationResult golden = pslq({one, phi, phi * phi}, ctx);
    ok = ok && golden.status == RelationResult::Status::found &&
         golden.coefficients[0] == 1 && golden.coefficients[1] == 1 &&
         golden.coefficients[2] == -1;

    Real pi_ref = pi_const(ctx);
    Real a5 = arctan(Real::of(make_rational(1, 5), wb));
    Real a239 = arctan(Real::of(make_rational(1, 239), wb));
    RelationResult machin = pslq({pi_ref, a5, a239}, ctx);
    ok = ok && machin.status == RelationResult::Status::found &&
         machin.coefficients[0] == 1 && machin.coefficients[1] == -16 &&
         machin.coefficients[2] == 4;

    const Rational expect_a[3] = {make_rational(6860, 3), make_rational(61040, 3),
                                  Rational(70980)};
    const Rational expect_s[3] = {Rational(-2520), Rational(-21280), Rational(-73080)};
    PrecisionContext mctx(60);
    for (unsigned long k = 1; k <= 3; ++k) {
        ConjectureFinding f = mine_conjecture(k, 60, mctx);
        ok = ok && f.found && f.confirmed && f.a == expect_a[k - 1] && f.s == expect_s[k - 1];
    }
    unsigned confirmed = 0;
    for (unsigned long k = 4; k <= 8; ++k) {
        ConjectureFinding f = mine_conjecture(k, 60, mctx);
        if (f.found && f.confirmed) ++confirmed;
    }
    double dt = seconds_since(t0);
    os << "golden/machin relations found; k=1..3 exact; k=4..8 confirmed " << confirmed
       << "/5 at 60/120 digits; " << dt << " s";
    report_line(7, ok && confirmed == 5 && dt <= 60.0, os.str());
}

// --- criterion 8: Wallis suite at 30 digits
void criterion_8() {
    PrecisionContext ctx(30);
    bool ok = true;
    for (unsigned n = 0; n <= 10; ++n) {
        if (!verify_integral("I5_" + std::to_string(n), 30, ctx).pass) ok = false;
        if (!verify_integral("I6_" + std::to_string(n), 30, ctx).pass) ok = false;
    }
    report_line(8, ok, "I5_n and I6_n verified for n = 0..10 at 30 digits");
}

// --- criterion 9: property checks
void criterion_9() {
    bool ok = true;
    std::ostringstream os;

    // (a) tail-bound soundness by 4x oversummation on 10 identities
    struct Case { const char* id; std::optional<Rational> x; unsigned long N; };
    const Case cases[] = {
        {"L1", make_rational(1, 2), 40}, {"L1", Rational(3), 120},
        {"L2", Rational(1), 60},         {"L3", Rational(2), 80},
        {"L4", make_rational(9, 10), 100},{"L5c", make_rational(1, 2), 60},
        {"P1", make_rational(1, 2), 50}, {"LS3", std::nullopt, 60},
        {"H2", std::nullopt, 50},        {"T1", std::nullopt, 100},
    };
    for (const auto& c : cases) {
        const auto& s = series_identity(c.id);
        Rational xv = c.x ? *c.x : Rational(0);
        Real bound = tail_bound(s, c.N, c.x, 256);
        Real t = Real::of(s.rule->eval(1, xv), 256);
        RatioStepper stepper(*s.rule, xv);
        Real sN(256), s4N(256);
        Real acc = t;
        for (unsigned long n = 1; n < 4 * c.N; ++n) {
            stepper.step(t, n);
            acc += t;
            if (n == c.N - 1) sN = acc;
        }
        s4N = acc;
        if (!(abs(s4N - sN) <= bound)) {
            ok = false;
            os << "oversummation failed for " << c.id << "; ";
        }
    }

    // (b) P4 == P5 termwise for n <= 1000
    for (unsigned long n = 1; n <= 1000; ++n)
        if (term("P4", n, Rational(1)) != term("P5", n, Rational(1))) {
            ok = false;
            os << "P4/P5 mismatch at n=" << n << "; ";
            break;
        }

    // (c) arcsin/arctan degeneracy < 1e-38 for k = 1..20 at 40 digits
    PrecisionContext ctx40(40);
    auto rows = degeneracy_report(20, ctx40);
    for (const auto& row : rows)
        if (!row.dependent) {
            ok = false;
            os << "degeneracy failed at k=" << row.k << "; ";
        }

    // (d) byte-identical JSON across repeated runs (timing fields aside)
    auto strip = [](std::string s) {
        s = std::regex_replace(s, std::regex("\"elapsed\": [0-9.e+-]+"), "\"elapsed\": 0");
        s = std::regex_replace(s, std::regex("\"wall_time\": [0-9.e+-]+"), "\"wall_time\": 0");
        return s;
    };
    CmdResult a = run_cli("verify --id LS1 --id T2p --id I1 --digits 10");
    CmdResult b = run_cli("verify --id LS1 --id T2p --id I1 --digits 10");
    if (strip(a.output) != strip(b.output) || a.exit_code != 0) {
        ok = false;
        os << "JSON runs differ; ";
    }

    os << "oversummation x10, P4==P5 (n<=1000), degeneracy k<=20 at 40 digits, "
          "deterministic JSON";
    report_line(9, ok, os.str());
}

}  // namespace

int main() {
    std::printf("acceptance suite (cbseries %s)\n", CBSERIES_VERSION);
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
