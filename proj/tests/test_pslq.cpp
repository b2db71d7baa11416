#include <catch2/catch.hpp>

#include "cbseries/miner.hpp"
#include "cbseries/pslq.hpp"
#include "test_helpers.hpp"

using namespace cbs;

namespace {

std::vector<long> small_coeffs(const RelationResult& r) {
    std::vector<long> v;
    for (const auto& c : r.coefficients) v.push_back(c.get_si());
    return v;
}

}  // namespace

TEST_CASE("pslq finds the golden ratio relation", "[pslq]") {
    PrecisionContext ctx(40);
    mpfr_prec_t wb = ctx.working_bits();
    Real one = Real::of_ui(1, wb);
    Real phi = sqrt_ui(5, wb) + one;
    phi.div_ui(2);
    RelationResult r = pslq({one, phi, phi * phi}, ctx);
    REQUIRE(r.status == RelationResult::Status::found);
    CHECK(small_coeffs(r) == std::vector<long>{1, 1, -1});
    CHECK(r.norm == 1);
}

TEST_CASE("pslq finds the Machin relation", "[pslq]") {
    PrecisionContext ctx(40);
    mpfr_prec_t wb = ctx.working_bits();
    Real pi = cbtest::mpfr_pi(wb);
    Real a5 = arctan(Real::of(make_rational(1, 5), wb));
    Real a239 = arctan(Real::of(make_rational(1, 239), wb));
    RelationResult r = pslq({pi, a5, a239}, ctx);
    REQUIRE(r.status == RelationResult::Status::found);
    CHECK(small_coeffs(r) == std::vector<long>{1, -16, 4});
}

TEST_CASE("pslq certifies the arcsin/arctan dependence", "[pslq]") {
    PrecisionContext ctx(40);
    mpfr_prec_t wb = ctx.working_bits();
    Real u = arcsin(Real::of(make_rational(1, 1), wb) / (sqrt_ui(2, wb) * Real::of_ui(2, wb)));
    Real v = arctan(Real::of_ui(1, wb) / sqrt_ui(7, wb));
    RelationResult r = pslq({u, v}, ctx);
    REQUIRE(r.status == RelationResult::Status::found);
    CHECK(small_coeffs(r) == std::vector<long>{1, -1});
}

TEST_CASE("pslq soundness: residual survives doubled precision", "[pslq]") {
    PrecisionContext ctx(30);
    mpfr_prec_t wb = ctx.working_bits();
    Real one = Real::of_ui(1, wb);
    Real phi = sqrt_ui(5, wb) + one;
    phi.div_ui(2);
    RelationResult r = pslq({one, phi, phi * phi}, ctx);
    REQUIRE(r.status == RelationResult::Status::found);
    // re-evaluate at doubled precision
    mpfr_prec_t wb2 = PrecisionContext(60).working_bits();
    Real one2 = Real::of_ui(1, wb2);
    Real phi2 = sqrt_ui(5, wb2) + one2;
    phi2.div_ui(2);
    Real resid = Real::of(r.coefficients[0], wb2) * one2 +
                 Real::of(r.coefficients[1], wb2) * phi2 +
                 Real::of(r.coefficients[2], wb2) * (phi2 * phi2);
    CHECK(abs(resid).to_double() <= 1e-20);
}

TEST_CASE("pslq scaling invariance and determinism", "[pslq]") {
    PrecisionContext ctx(40);
    mpfr_prec_t wb = ctx.working_bits();
    Real pi = cbtest::mpfr_pi(wb);
    Real a5 = arctan(Real::of(make_rational(1, 5), wb));
    Real a239 = arctan(Real::of(make_rational(1, 239), wb));
    RelationResult base = pslq({pi, a5, a239}, ctx);
    // common positive rational scaling leaves the coefficients unchanged
    Real scale = Real::of(make_rational(7, 3), wb);
    RelationResult scaled = pslq({pi * scale, a5 * scale, a239 * scale}, ctx);
    REQUIRE(scaled.status == RelationResult::Status::found);
    CHECK(small_coeffs(base) == small_coeffs(scaled));
    // identical inputs, identical outputs
    RelationResult again = pslq({pi, a5, a239}, ctx);
    CHECK(small_coeffs(base) == small_coeffs(again));
    CHECK(base.iterations == again.iterations);
}

TEST_CASE("pslq rejects bad input", "[pslq]") {
    PrecisionContext ctx(30);
    mpfr_prec_t wb = ctx.working_bits();
    CHECK_THROWS_AS(pslq({Real::of_ui(1, wb)}, ctx), std::invalid_argument);
    CHECK_THROWS_AS(pslq({Real::of_ui(1, wb), Real(wb)}, ctx), std::invalid_argument);
}

TEST_CASE("degenerate 4-vector basis yields the trivial relation first", "[pslq]") {
    PrecisionContext ctx(40);
    ConjectureBasis b = basis(2, ctx);
    RelationResult r = pslq({b.F, b.one, b.u, b.v}, ctx);
    REQUIRE(r.status == RelationResult::Status::found);
    CHECK(small_coeffs(r) == std::vector<long>{0, 0, 1, -1});
}

TEST_CASE("mine_conjecture recovers the printed coefficients", "[pslq][miner]") {
    PrecisionContext ctx(60);
    ConjectureFinding f1 = mine_conjecture(1, 60, ctx);
    REQUIRE(f1.found);
    CHECK(f1.a == make_rational(6860, 3));
    CHECK(f1.s == Rational(-2520));
    CHECK(f1.confirmed);

    ConjectureFinding f2 = mine_conjecture(2, 60, ctx);
    REQUIRE(f2.found);
    CHECK(f2.a == make_rational(61040, 3));
    CHECK(f2.s == Rational(-21280));
    CHECK(f2.confirmed);

    ConjectureFinding f3 = mine_conjecture(3, 60, ctx);
    REQUIRE(f3.found);
    CHECK(f3.a == Rational(70980));
    CHECK(f3.s == Rational(-73080));
    CHECK(f3.confirmed);
}

TEST_CASE("degeneracy report", "[miner]") {
    PrecisionContext ctx(40);
    auto rows = degeneracy_report(20, ctx);
    REQUIRE(rows.size() == 20);
    for (const auto& row : rows) {
        INFO(row.k);
        REQUIRE(row.dependent);
    }
}
