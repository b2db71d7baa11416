// cbseries: verify central-binomial / Catalan-constant series and integral
// identities to arbitrary precision, evaluate the underlying constants and
// hypergeometric values, and mine integer relations for the 2F1 family.
//
// Exit codes: 0 all checks as expected (errata must fail inside their bands),
// 1 at least one unexpected outcome, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cbseries/catalan.hpp"
#include "cbseries/hyp.hpp"
#include "cbseries/miner.hpp"
#include "cbseries/pi.hpp"
#include "cbseries/report.hpp"
#include "cbseries/series.hpp"
#include "cbseries/version.hpp"

namespace {

unsigned env_default_digits(unsigned fallback) {
    const char* v = std::getenv("CBSERIES_DIGITS");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long d = std::strtol(v, &end, 10);
    if (end == v || *end || d < 1 || d > 1000) return fallback;
    return static_cast<unsigned>(d);
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += ' ';
        s += argv[i];
    }
    return s;
}

bool is_series_id(const std::string& id) {
    for (const auto& s : cbs::catalog())
        if (s.id == id) return true;
    return false;
}

bool is_integral_id(const std::string& id) {
    for (const auto& ii : cbs::integral_catalog())
        if (ii.id == id) return true;
    return false;
}

int run_verify(const std::vector<std::string>& ids, unsigned digits,
               const std::string& strategy_name, const std::string& report_path,
               const std::string& format, const std::string& command) {
    auto start = std::chrono::steady_clock::now();
    cbs::PrecisionContext ctx(digits);
    cbs::Strategy strategy = cbs::strategy_from_string(strategy_name);

    std::vector<std::string> series_ids, integral_ids;
    if (ids.empty()) {
        for (const auto& s : cbs::catalog()) series_ids.push_back(s.id);
        for (const auto& ii : cbs::integral_catalog()) integral_ids.push_back(ii.id);
    } else {
        for (const auto& id : ids) {
            if (is_series_id(id)) series_ids.push_back(id);
            else if (is_integral_id(id)) integral_ids.push_back(id);
            else {
                std::cerr << "unknown identity id: " << id << "\n";
                return 2;
            }
        }
    }

    // with explicitly selected ids an infeasible strategy is a usage error;
    // on a full-catalog run infeasible rows are skipped instead
    bool strict = !ids.empty();
    cbs::RunReport rep;
    rep.command = command;
    for (const auto& id : series_ids) {
        const auto& s = cbs::series_identity(id);
        auto rows = cbs::verify_identity_grid(s, digits, strategy, ctx, strict);
        for (auto& r : rows) rep.items.push_back(std::move(r));
    }
    bool run_integrals = strategy == cbs::Strategy::auto_pick ||
                         strategy == cbs::Strategy::quadrature;
    if (run_integrals)
        for (const auto& id : integral_ids)
            rep.items.push_back(cbs::verify_integral(id, digits, ctx));
    else if (strict && !integral_ids.empty()) {
        std::cerr << "integral identities verify by quadrature only\n";
        return 2;
    }
    rep.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::string rendered = format == "md" ? cbs::to_markdown(rep)
                                          : cbs::to_json(rep).dump(2) + "\n";
    std::cout << rendered;
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "cannot write report to " << report_path << "\n";
            return 2;
        }
        out << (format == "md" ? rendered : cbs::to_json(rep).dump(2) + "\n");
    }
    return rep.all_as_expected() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"central-binomial series and Catalan constant verification"};
    app.set_version_flag("--version", CBSERIES_VERSION);
    app.require_subcommand(1);
    std::string command = join_args(argc, argv);

    // catalog
    auto* cat = app.add_subcommand("catalog", "list series and integral identities");
    std::string cat_format = "md";
    cat->add_option("--format", cat_format, "json or md")
        ->check(CLI::IsMember({"json", "md"}));

    // verify
    auto* ver = app.add_subcommand("verify", "verify identities at their catalog grids");
    std::vector<std::string> ver_ids;
    unsigned ver_digits = env_default_digits(12);
    std::string ver_strategy = "auto";
    std::string ver_report;
    std::string ver_format = "json";
    ver->add_option("--id", ver_ids, "identity ids (default: all)");
    ver->add_option("--digits", ver_digits, "requested digits (>= 6)");
    ver->add_option("--strategy", ver_strategy, "direct|accel|quadrature|auto")
        ->check(CLI::IsMember({"direct", "accel", "quadrature", "auto"}));
    ver->add_option("--report", ver_report, "also write the report to this path");
    ver->add_option("--format", ver_format, "json or md")
        ->check(CLI::IsMember({"json", "md"}));

    // constant
    auto* con = app.add_subcommand("constant", "compute G or pi");
    std::string con_name;
    unsigned con_digits = env_default_digits(30);
    std::string con_method = "best";
    con->add_option("name", con_name, "G or pi")->required()
        ->check(CLI::IsMember({"G", "pi"}));
    con->add_option("--digits", con_digits, "digits (<= 1000)");
    con->add_option("--method", con_method,
                    "G: accelerated_definition|quad_arctan|quad_cosh|quad_logcos|quad_sinx|best|all");

    // mine
    auto* mine = app.add_subcommand("mine", "mine 2F1 conjecture coefficients");
    unsigned long mine_kmin = 1, mine_kmax = 3;
    unsigned mine_digits = env_default_digits(60);
    std::string mine_format = "md";
    mine->add_option("--k-min", mine_kmin, "first k (>= 1)");
    mine->add_option("--k-max", mine_kmax, "last k (<= 64)");
    mine->add_option("--digits", mine_digits, "mining digits (confirmation at 2x)");
    mine->add_option("--format", mine_format, "json or md")
        ->check(CLI::IsMember({"json", "md"}));

    // sum
    auto* sum = app.add_subcommand("sum", "evaluate one series");
    std::string sum_id, sum_x;
    unsigned sum_digits = env_default_digits(12);
    std::string sum_strategy = "auto";
    sum->add_option("--id", sum_id, "series id")->required();
    sum->add_option("--x", sum_x, "exact rational p/q (for x-dependent series)");
    sum->add_option("--digits", sum_digits, "digits");
    sum->add_option("--strategy", sum_strategy, "direct|accel|auto")
        ->check(CLI::IsMember({"direct", "accel", "auto"}));

    // integral
    auto* intg = app.add_subcommand("integral", "evaluate one catalog integral");
    std::string intg_id;
    unsigned intg_digits = env_default_digits(30);
    intg->add_option("--id", intg_id, "integral id")->required();
    intg->add_option("--digits", intg_digits, "digits");

    // hyp
    auto* hyp = app.add_subcommand("hyp", "evaluate 2F1(2,2;9/2;z)");
    unsigned long hyp_k = 0;
    std::string hyp_z;
    unsigned hyp_digits = env_default_digits(30);
    hyp->add_option("--k", hyp_k, "use z = 1/(4k)");
    hyp->add_option("--z", hyp_z, "exact rational z = p/q, |z| < 1");
    hyp->add_option("--digits", hyp_digits, "digits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cat) {
            if (cat_format == "json")
                std::cout << cbs::catalog_json().dump(2) << "\n";
            else
                std::cout << cbs::catalog_markdown();
            return 0;
        }
        if (*ver) {
            if (ver_digits < 6) {
                std::cerr << "verify needs --digits >= 6\n";
                return 2;
            }
            return run_verify(ver_ids, ver_digits, ver_strategy, ver_report, ver_format,
                              command);
        }
        if (*con) {
            if (con_digits < 1 || con_digits > 1000) {
                std::cerr << "constant needs 1 <= digits <= 1000\n";
                return 2;
            }
            cbs::PrecisionContext ctx(con_digits);
            if (con_name == "pi") {
                std::cout << cbs::pi_const(ctx).to_display_string(con_digits) << "\n";
                return 0;
            }
            if (con_method == "all") {
                using M = cbs::CatalanMethod;
                const M methods[] = {M::accelerated_definition, M::quad_arctan, M::quad_cosh,
                                     M::quad_logcos, M::quad_sinx};
                std::vector<cbs::Real> vals;
                for (M m : methods) {
                    cbs::Real v = cbs::catalan(ctx, m);
                    std::cout << cbs::to_string(m) << "  " << v.to_display_string(con_digits) << "\n";
                    vals.push_back(v);
                }
                std::cout << "pairwise agreement (digits):\n";
                for (std::size_t i = 0; i < vals.size(); ++i) {
                    for (std::size_t j = 0; j < vals.size(); ++j) {
                        if (j) std::cout << ' ';
                        if (i == j) { std::cout << "  -"; continue; }
                        cbs::Real d = cbs::abs(vals[i] - vals[j]);
                        long digits_agree = d.is_zero()
                            ? static_cast<long>(con_digits)
                            : -static_cast<long>(mpfr_get_exp(d.raw())) * 301 / 1000;
                        std::cout << (digits_agree >= static_cast<long>(con_digits)
                                          ? con_digits
                                          : digits_agree);
                    }
                    std::cout << "\n";
                }
                return 0;
            }
            cbs::CatalanMethod m = cbs::catalan_method_from_string(con_method);
            std::cout << cbs::catalan(ctx, m).to_display_string(con_digits) << "\n";
            return 0;
        }
        if (*mine) {
            if (mine_kmin < 1 || mine_kmax < mine_kmin || mine_kmax > 64) {
                std::cerr << "mine needs 1 <= k-min <= k-max <= 64\n";
                return 2;
            }
            cbs::PrecisionContext ctx(mine_digits);
            cbs::Json rows = cbs::Json::array();
            bool md = mine_format == "md";
            if (md) {
                std::cout << "| k | a_k | s_k (= b_k + c_k) | residual | confirmed | status |\n";
                std::cout << "|---|---|---|---|---|---|\n";
            }
            for (unsigned long k = mine_kmin; k <= mine_kmax; ++k) {
                cbs::ConjectureFinding f = cbs::mine_conjecture(k, mine_digits, ctx);
                if (md) {
                    std::cout << "| " << k << " | " << (f.found ? cbs::to_string(f.a) : "-")
                              << " | " << (f.found ? cbs::to_string(f.s) : "-") << " | "
                              << (f.found ? f.residual : "-") << " | "
                              << (f.confirmed ? "yes" : "no") << " | " << f.status << " |\n";
                } else {
                    cbs::Json row;
                    row["k"] = k;
                    row["a"] = f.found ? cbs::to_string(f.a) : "";
                    row["s"] = f.found ? cbs::to_string(f.s) : "";
                    row["residual"] = f.residual;
                    row["confirmed"] = f.confirmed;
                    row["status"] = f.status;
                    rows.push_back(row);
                }
            }
            if (md) {
                std::cout << "\nbasis note: arcsin(1/(2*sqrt(k))) = arctan(1/sqrt(4k-1)) "
                             "exactly, so only a_k and the combination s_k = b_k + c_k are "
                             "identifiable; any b_k + c_k = s_k matches the template.\n";
            } else {
                cbs::Json j;
                j["tool_version"] = CBSERIES_VERSION;
                j["command"] = command;
                j["rows"] = rows;
                j["degeneracy_note"] =
                    "arcsin(1/(2*sqrt(k))) = arctan(1/sqrt(4k-1)) exactly; only a_k and "
                    "s_k = b_k + c_k are identifiable";
                std::cout << j.dump(2) << "\n";
            }
            return 0;
        }
        if (*sum) {
            cbs::PrecisionContext ctx(sum_digits);
            const auto& s = cbs::series_identity(sum_id);
            std::optional<cbs::Rational> x;
            if (!sum_x.empty()) x = cbs::parse_rational(sum_x);
            cbs::PartialSum ps;
            if (sum_strategy == "accel" ||
                (sum_strategy == "auto" && cbs::rigorous_digit_cap(s, x) < sum_digits)) {
                ps = cbs::sum_accelerated(s, x, ctx);
            } else {
                ps = cbs::sum_direct(s, x, ctx, sum_digits);
            }
            std::cout << ps.value.to_display_string(sum_digits) << "\n";
            std::cout << "terms_used " << ps.terms_used << "  tail_bound "
                      << ps.tail_bound.to_string(3)
                      << (ps.rigorous ? " (rigorous)" : " (heuristic)") << "\n";
            return 0;
        }
        if (*intg) {
            cbs::PrecisionContext ctx(intg_digits);
            cbs::QuadResult q = cbs::integrate(intg_id, ctx);
            std::cout << q.value.to_display_string(intg_digits) << "\n";
            std::cout << "levels " << q.levels << "  evaluations " << q.evaluations
                      << "  err_estimate " << q.err_estimate.to_string(3) << "\n";
            return 0;
        }
        if (*hyp) {
            cbs::PrecisionContext ctx(hyp_digits);
            cbs::Rational z;
            if (hyp_k >= 1) z = cbs::make_rational(1, 4 * hyp_k);
            else if (!hyp_z.empty()) z = cbs::parse_rational(hyp_z);
            else {
                std::cerr << "hyp needs --k or --z\n";
                return 2;
            }
            cbs::HypValue v = cbs::f21_9half(z, ctx);
            std::cout << v.value.to_display_string(hyp_digits) << "\n";
            std::cout << "terms_used " << v.terms_used << "  tail_bound "
                      << v.tail_bound.to_string(3) << " (rigorous)\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
