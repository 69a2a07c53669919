#include "odelin/rational_function.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace odelin;
using odelin::testing::rf;

TEST_CASE("power-rule integrals") {
    Symbol x = Symbol::x(), y = Symbol::y();
    CHECK(*antiderivative(rf("2*x/y^3"), y) == rf("-x/y^2"));
    CHECK(*antiderivative(rf("k^2", {"k"}), x) == rf("k^2*x", {"k"}));
    CHECK(antiderivative(RationalFunction(), x)->is_zero());
    CHECK(*antiderivative(rf("3*x^2 + 2*x*y"), x) == rf("x^3 + x^2*y"));
}

TEST_CASE("logarithmic parts are rejected") {
    Symbol x = Symbol::x(), y = Symbol::y();
    CHECK(!antiderivative(rf("1/y"), y).has_value());
    CHECK(!antiderivative(rf("1/(x + y)"), x).has_value());
    CHECK(!antiderivative(rf("(2*y + 1)/(y^2 + y)"), y).has_value());
}

TEST_CASE("repeated poles integrate rationally") {
    Symbol y = Symbol::y();
    // 1/(y+1)^2 integrates to -1/(y+1)
    auto r = antiderivative(rf("1/(y^2 + 2*y + 1)"), y);
    REQUIRE(r.has_value());
    CHECK(*r == RationalFunction(Polynomial(Rational(-1)), rf("y + 1").numerator()));
    // mixed polynomial + proper part
    auto m = antiderivative(rf("(y^3 + x)/(y^2)"), y);
    REQUIRE(m.has_value());
    CHECK(*m == rf("(y^3 - 2*x)/(2*y)"));
    CHECK(m->derivative(y) == rf("(y^3 + x)/(y^2)"));
}

TEST_CASE("antiderivative round trip on random inputs") {
    std::mt19937 rng(7201);
    Symbol x = Symbol::x(), y = Symbol::y();
    int succeeded = 0;
    for (int i = 0; i < 60; ++i) {
        RationalFunction f = odelin::testing::random_rational_function(rng);
        for (Symbol v : {x, y}) {
            auto F = antiderivative(f, v);
            if (!F) continue; // genuine log part
            ++succeeded;
            CHECK(F->derivative(v) == f);
        }
    }
    CHECK(succeeded > 20); // the sample is not degenerate
}

TEST_CASE("derivatives of rational functions always integrate back") {
    std::mt19937 rng(7202);
    Symbol y = Symbol::y();
    for (int i = 0; i < 25; ++i) {
        RationalFunction f = odelin::testing::random_rational_function(rng);
        RationalFunction df = f.derivative(y);
        auto F = antiderivative(df, y);
        REQUIRE(F.has_value());
        CHECK(F->derivative(y) == df);
    }
}
