#include <catch2/catch.hpp>

#include "cbseries/catalan.hpp"
#include "cbseries/pi.hpp"
#include "test_helpers.hpp"

using namespace cbs;

TEST_CASE("pi to 20 digits", "[constants]") {
    PrecisionContext ctx(20);
    Real p = pi_const(ctx);
    CHECK(p.to_display_string(20) == "3.1415926535897932385");
    CHECK(pi_const(PrecisionContext(6)).to_display_string(6) == "3.14159");
    // independent oracle: mpfr's own pi at higher precision
    Real oracle = cbtest::mpfr_pi(512);
    CHECK(cbtest::within(p, oracle, 1e-20));
}

TEST_CASE("pi consistency with arctan identity", "[constants]") {
    PrecisionContext ctx(40);
    Real p = pi_const(ctx);
    Real a = arctan(Real::of_ui(1, ctx.working_bits()));
    a.mul_ui(4);
    CHECK(cbtest::within(p, a, 1e-40));
}

TEST_CASE("catalan via accelerated definition", "[constants]") {
    PrecisionContext ctx(30);
    Real g = catalan(ctx, CatalanMethod::accelerated_definition);
    // first six digits of the decimal expansion are 0.915965
    CHECK(g.to_string(30).substr(0, 8) == "9.159655");
    Real oracle = cbtest::mpfr_catalan(512);
    CHECK(cbtest::within(g, oracle, 1e-30));
}

TEST_CASE("defining series partial sum, 3 terms", "[constants]") {
    // 1 - 1/9 + 1/25 = 209/225 = 0.9288...
    Rational s = Rational(1) - make_rational(1, 9) + make_rational(1, 25);
    CHECK(s == make_rational(209, 225));
    Real g = catalan(PrecisionContext(20), CatalanMethod::accelerated_definition);
    // the partial sum brackets G together with the 4-term sum
    Rational s4 = s - make_rational(1, 49);
    CHECK(Real::of(s4, 128) < g);
    CHECK(g < Real::of(s, 128));
}

TEST_CASE("accelerated definition vs quadrature at 50 digits", "[constants]") {
    PrecisionContext ctx(50);
    Real a = catalan(ctx, CatalanMethod::accelerated_definition);
    Real b = catalan(ctx, CatalanMethod::quad_arctan);
    CHECK(cbtest::within(a, b, 1e-48));
}

TEST_CASE("all five catalan methods pairwise agree at 30 digits", "[constants][methods]") {
    PrecisionContext ctx(30);
    const CatalanMethod ms[] = {CatalanMethod::accelerated_definition,
                                CatalanMethod::quad_arctan, CatalanMethod::quad_cosh,
                                CatalanMethod::quad_logcos, CatalanMethod::quad_sinx};
    std::vector<Real> vals;
    for (auto m : ms) vals.push_back(catalan(ctx, m));
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j)
            REQUIRE(cbtest::abs_diff(vals[i], vals[j]) <= 1e-28);
}

TEST_CASE("best method cross-checks and matches the oracle", "[constants]") {
    PrecisionContext ctx(40);
    Real g = catalan(ctx, CatalanMethod::best);
    CHECK(cbtest::within(g, cbtest::mpfr_catalan(512), 1e-40));
}

TEST_CASE("doubled guard digits leave exported constants fixed", "[constants]") {
    // the recompute-at-higher-precision invariant on the exported values
    PrecisionContext base(25, 15), doubled(25, 30);
    CHECK(cbtest::abs_diff(catalan(base, CatalanMethod::accelerated_definition),
                           catalan(doubled, CatalanMethod::accelerated_definition)) <= 1e-25);
    CHECK(cbtest::abs_diff(catalan(base, CatalanMethod::quad_arctan),
                           catalan(doubled, CatalanMethod::quad_arctan)) <= 1e-25);
}

TEST_CASE("arcsin/arctan degeneracy vanishes for k = 1..20", "[constants]") {
    PrecisionContext ctx(30);
    mpfr_prec_t wb = ctx.working_bits();
    for (unsigned long k = 1; k <= 20; ++k) {
        Real sk2 = sqrt_ui(k, wb);
        sk2.mul_ui(2);
        Real a = arcsin(Real::of_ui(1, wb) / sk2);
        Real b = arctan(Real::of_ui(1, wb) / sqrt_ui(4 * k - 1, wb));
        REQUIRE(cbtest::abs_diff(a, b) <= 1e-30);
    }
}
