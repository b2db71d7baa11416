#include <catch2/catch.hpp>

#include <set>

#include "cbseries/expr.hpp"
#include "cbseries/series.hpp"
#include "test_helpers.hpp"

using namespace cbs;

namespace {

bool struct_equal(const Expr& a, const Expr& b) {
    if (a->kind != b->kind) return false;
    if (a->kind == ExprKind::rational_lit && a->lit != b->lit) return false;
    if (a->kind == ExprKind::powint_op && a->ipow != b->ipow) return false;
    if (a->kids.size() != b->kids.size()) return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!struct_equal(a->kids[i], b->kids[i])) return false;
    return true;
}

}  // namespace

TEST_CASE("describe canonical strings", "[expr]") {
    CHECK(describe(lit(3, 40)) == "3/40");
    CHECK(describe(div_e(pi_sym(), lit(2))) == "π/2");

    const auto& t3 = series_identity("T3");
    CHECK(describe(t3.rhs) == "20/π + 8·G/π − 26/3");

    const auto& l2 = series_identity("L2");
    CHECK(describe(l2.rhs) == "2·arctan(√(x/(4−x)))^2");
}

TEST_CASE("describe is injective on the catalog expression set", "[expr]") {
    std::vector<Expr> pool;
    for (const auto& s : catalog()) {
        pool.push_back(s.rhs);
        if (s.lhs_scale) pool.push_back(s.lhs_scale);
        for (const auto& [x, e] : s.rhs_patches) pool.push_back(e);
    }
    for (const auto& ii : integral_catalog()) pool.push_back(ii.rhs);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            if (describe(pool[i]) == describe(pool[j]))
                REQUIRE(struct_equal(pool[i], pool[j]));
        }
    }
}

TEST_CASE("evaluation of theorem right sides", "[expr]") {
    PrecisionContext ctx(30);
    // T1: 22/3 - 8/pi - 16G/pi = 0.121879779369907478817...
    Real t1 = eval(series_identity("T1").rhs, ctx);
    CHECK(cbtest::within(t1, cbtest::real_from("0.1218797793699074788170418158787848"), 1e-28));
    // pi/2
    Real p2 = eval(div_e(pi_sym(), lit(2)), ctx);
    CHECK(cbtest::within(p2, cbtest::real_from("1.5707963267948966192313216916397514"), 1e-28));
}

TEST_CASE("removable singularity patches", "[expr]") {
    PrecisionContext ctx(20);
    const auto& l4 = series_identity("L4");
    // patched point: the right side's limit at 0 is 0
    Real patched = eval(l4.rhs_at(Rational(0)), ctx);
    CHECK(patched.is_zero());
    // continuity near the patch: value at x = 1e-6 is within 1e-9 of the limit
    Real near = eval(l4.rhs, make_rational(1, 1000000), ctx);
    CHECK(abs(near).to_double() < 1e-9);

    const auto& l6 = series_identity("L6");
    CHECK(eval(l6.rhs_at(Rational(0)), ctx).is_zero());

    const auto& l2 = series_identity("L2");
    Real at4 = eval(l2.rhs_at(Rational(4)), ctx);
    Real pi2_half = eval(div_e(powint_e(pi_sym(), 2), lit(2)), ctx);
    CHECK(cbtest::within(at4, pi2_half, 1e-19));
}

TEST_CASE("precision monotonicity of catalog right sides", "[expr]") {
    // 12- and 30-digit evaluations agree to 12 digits at a sampled x
    PrecisionContext lo(12), hi(30);
    Rational x = make_rational(1, 2);
    for (const auto& s : catalog()) {
        Real a = s.uses_x ? eval(s.rhs, x, lo) : eval(s.rhs, lo);
        Real b = s.uses_x ? eval(s.rhs, x, hi) : eval(s.rhs, hi);
        REQUIRE(cbtest::abs_diff(a, b) <= 1e-12);
    }
}

TEST_CASE("evaluation errors", "[expr]") {
    PrecisionContext ctx(15);
    // missing x
    CHECK_THROWS_AS(eval(series_identity("L1").rhs, ctx), std::invalid_argument);
    // domain violation: sqrt of negative at x = 5 (4 - x < 0)
    CHECK_THROWS_AS(eval(series_identity("L1").rhs, Rational(5), ctx), std::domain_error);
    // log of zero at x = 0 in the L5 right side
    CHECK_THROWS_AS(eval(series_identity("L5c").rhs, Rational(0), ctx), std::domain_error);
}
