#include "odelin/geometry.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace odelin;
using odelin::testing::rf;

namespace {

RootCoefficients root_polar() { return {rf("x"), rf("0"), rf("2/x"), rf("0")}; }

ChristoffelSet polar_set() { return complete(root_polar(), {rf("0"), rf("-1/x")}); }

ChristoffelSet random_set(std::mt19937& rng) {
    return ChristoffelSet{odelin::testing::random_monomial(rng, 1), odelin::testing::random_monomial(rng, 1),
                          odelin::testing::random_monomial(rng, 1), odelin::testing::random_monomial(rng, 1),
                          odelin::testing::random_monomial(rng, 1), odelin::testing::random_monomial(rng, 1)};
}

} // namespace

TEST_CASE("gauge completion") {
    ChristoffelSet cs = polar_set();
    CHECK(cs.a.is_zero());
    CHECK(cs.b.is_zero());
    CHECK(cs.c == rf("x"));
    CHECK(cs.d.is_zero());
    CHECK(cs.e == rf("-1/x"));
    CHECK(cs.f.is_zero());

    ChristoffelSet plain = complete(root_polar(), {});
    CHECK(plain.a == rf("2/x"));
    CHECK(plain.f.is_zero());
    ChristoffelSet zero = complete(RootCoefficients{}, {});
    CHECK(zero == ChristoffelSet{});
}

TEST_CASE("curvature of flat and non-flat sets") {
    CHECK(curvature(ChristoffelSet{}).all_zero());
    CHECK(curvature(polar_set()).all_zero());
    // dropping the gauge term breaks flatness
    ChristoffelSet wrong = complete(root_polar(), {});
    CHECK(!curvature(wrong).all_zero());
    CHECK(!curvature(ChristoffelSet{rf("0"), rf("0"), rf("x"), rf("0"), rf("0"), rf("0")})
               .r1_212.is_zero());
}

TEST_CASE("flatness residuals") {
    auto zero = geodesic_conditions(ChristoffelSet{});
    for (const auto& r : zero) CHECK(r.is_zero());
    auto polar = geodesic_conditions(polar_set());
    for (const auto& r : polar) CHECK(r.is_zero());
    auto wrong = geodesic_conditions(ChristoffelSet{rf("0"), rf("0"), rf("x"), rf("0"), rf("0"), rf("0")});
    CHECK(!wrong[1].is_zero());
}

TEST_CASE("residuals match curvature components symbolically") {
    std::mt19937 rng(7501);
    Symbol x = Symbol::x(), y = Symbol::y();
    for (int i = 0; i < 50; ++i) {
        ChristoffelSet cs = random_set(rng);
        CurvatureComponents comps = curvature(cs);
        auto res = geodesic_conditions(cs);
        CHECK(res[0] == comps.r1_112);
        CHECK(res[1] == comps.r1_212);
        CHECK(res[2] == comps.r2_112);
        CHECK(res[3] == -(comps.r1_112 + comps.r2_212));
        // the two flatness tests agree
        bool res_zero = res[0].is_zero() && res[1].is_zero() && res[2].is_zero() && res[3].is_zero();
        CHECK(res_zero == comps.all_zero());
        // explicit residual expressions
        CHECK(comps.r1_112 ==
              cs.a.derivative(y) - cs.b.derivative(x) + cs.b * cs.e - cs.c * cs.d);
    }
}

TEST_CASE("gauge search") {
    auto polar = gauge_search(root_polar(), 2);
    REQUIRE(polar.has_value());
    CHECK(polar->b.is_zero());
    CHECK(polar->e == rf("-1/x"));

    auto zero = gauge_search(RootCoefficients{}, 1);
    REQUIRE(zero.has_value());
    CHECK(zero->b.is_zero());
    CHECK(zero->e.is_zero());
}

TEST_CASE("gauge search exhausts on a root that fails the criteria") {
    RootCoefficients bad{rf("0"), rf("0"), rf("0"), rf("y^3")};
    CHECK(!gauge_search(bad, 2).has_value());
}

TEST_CASE("metric integration along a straight segment") {
    ChristoffelSet cs = polar_set();
    MetricState end = metric_integrate(cs, {1, 1}, {1, 0, 1}, {{2, 1}});
    CHECK(std::fabs(end.p - 1.0) < 1e-8);
    CHECK(std::fabs(end.q) < 1e-8);
    CHECK(std::fabs(end.r - 4.0) < 1e-8);

    MetricState frozen = metric_integrate(ChristoffelSet{}, {1, 1}, {3, -1, 2}, {{5, 7}});
    CHECK(frozen.p == 3.0);
    CHECK(frozen.q == -1.0);
    CHECK(frozen.r == 2.0);

    ChristoffelSet pole{rf("0"), rf("0"), rf("0"), rf("0"), rf("-1/x"), rf("0")};
    CHECK_THROWS_AS(metric_integrate(pole, {-1, 0}, {1, 0, 1}, {{1, 0}}), PoleAtPoint);
}

TEST_CASE("path independence witnesses flatness") {
    auto flat = path_independence_check(polar_set(), {1, 1}, {1, 0, 1}, {2, 2});
    CHECK(flat.max_discrepancy < 1e-8);

    auto zero = path_independence_check(ChristoffelSet{}, {1, 1}, {1, 0, 1}, {2, 2});
    CHECK(zero.max_discrepancy == 0.0);

    // without the gauge term the connection is curved and the two routes differ
    auto curved = path_independence_check(complete(root_polar(), {}), {1, 1}, {1, 0, 1}, {2, 2});
    CHECK(curved.max_discrepancy > 1e-8);
}

TEST_CASE("gauge-completed catalog roots are flat, symbolically and numerically") {
    std::vector<std::string> kl{"k", "l"};
    std::vector<RootCoefficients> roots{
        {rf("0", kl), rf("2/y", kl), rf("k/2", kl), rf("-l*y", kl)},
        root_polar(),
        {rf("-x/y^2"), rf("1/y"), rf("2/x"), rf("0")},
    };
    for (const RootCoefficients& root : roots) {
        auto gauge = gauge_search(root, 2);
        REQUIRE_MESSAGE(gauge.has_value(), "no gauge for root " << root.to_string());
        ChristoffelSet cs = complete(root, *gauge);
        CHECK(curvature(cs).all_zero());
        for (const auto& r : geodesic_conditions(cs)) CHECK(r.is_zero());
        // numeric witness away from poles, with parameters pinned to 1
        ChristoffelSet numeric = cs;
        for (RationalFunction* coeff :
             {&numeric.a, &numeric.b, &numeric.c, &numeric.d, &numeric.e, &numeric.f})
            for (Symbol s : coeff->support())
                if (s.is_parameter()) *coeff = coeff->substitute(s, Rational(1));
        auto pir = path_independence_check(numeric, {1, 1}, {1, 0, 1}, {2, 2});
        CHECK(pir.max_discrepancy < 1e-8);
    }
}

TEST_CASE("integrator converges at fourth order") {
    ChristoffelSet cs = polar_set();
    auto error_at = [&](int steps) {
        MetricState end = metric_integrate(cs, {1, 1}, {1, 0, 1}, {{2, 1}}, steps);
        return std::fabs(end.r - 4.0);
    };
    double coarse = error_at(2);
    double fine = error_at(4);
    CHECK(coarse > 0.0);
    CHECK(fine > 0.0);
    CHECK(coarse / fine >= 8.0);
}
