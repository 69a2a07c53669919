#include "odelin/rational_function.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace odelin;
using odelin::testing::rf;

TEST_CASE("construction reduces to canonical form") {
    CHECK(rf("(x^2 - y^2)/(x - y)") == rf("x + y"));
    CHECK((rf("x/y") * rf("y/x")).is_one());
    CHECK(rf("0/x").is_zero());
    // denominator sign is normalized
    CHECK(rf("x/(-y)") == rf("-x/y"));
    CHECK(rf("1/2") * rf("2") == rf("1"));
}

TEST_CASE("cube of a monomial quotient expands schoolbook-style") {
    RationalFunction base = rf("-x/y^2");
    // independent oracle: repeated multiplication
    RationalFunction by_mult = base * base * base;
    CHECK(by_mult == rf("-x^3/y^6"));
    CHECK(base.pow(3) == by_mult);
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(rf("x") / RationalFunction(), DivisionByZero);
    CHECK_THROWS_AS(RationalFunction(Polynomial(Rational(1)), Polynomial()), DivisionByZero);
}

TEST_CASE("partial derivatives") {
    Symbol x = Symbol::x(), y = Symbol::y();
    CHECK(rf("-x/y^2").derivative(y) == rf("2*x/y^3"));
    CHECK(rf("2/x").derivative(x) == rf("-2/x^2"));
    Symbol k = declare_parameter("k");
    CHECK(rf("k^2 - 5*l", {"k", "l"}).derivative(k) == rf("2*k", {"k"}));
}

TEST_CASE("mixed partials commute") {
    std::mt19937 rng(7101);
    Symbol x = Symbol::x(), y = Symbol::y();
    for (int i = 0; i < 25; ++i) {
        RationalFunction f = odelin::testing::random_rational_function(rng);
        CHECK(f.derivative(x).derivative(y) == f.derivative(y).derivative(x));
    }
}

TEST_CASE("canonical-form soundness under products") {
    std::mt19937 rng(7102);
    for (int i = 0; i < 30; ++i) {
        Polynomial p = odelin::testing::random_polynomial(rng, 3, 3, 3);
        Polynomial q = odelin::testing::random_polynomial(rng, 3, 3, 3);
        Polynomial r = odelin::testing::random_polynomial(rng, 3, 3, 3);
        if (q.is_zero() || r.is_zero()) continue;
        RationalFunction lhs = RationalFunction(p, q) * RationalFunction(q, r);
        CHECK(lhs == RationalFunction(p, r));
    }
}

TEST_CASE("nth root round trip") {
    std::mt19937 rng(7103);
    for (int i = 0; i < 30; ++i) {
        RationalFunction f = odelin::testing::random_rational_function(rng);
        for (std::uint32_t n : {2u, 3u}) {
            RationalFunction power = f.pow(static_cast<std::int32_t>(n));
            auto root = nth_root(power, n);
            REQUIRE(root.has_value());
            CHECK(root->pow(static_cast<std::int32_t>(n)) == power);
        }
    }
    CHECK(*nth_root(rf("-x^3/y^6"), 3) == rf("-x/y^2"));
    CHECK(*nth_root(rf("x^2/9"), 2) == rf("x/3"));
    CHECK(!nth_root(rf("x"), 2).has_value());
}

TEST_CASE("exact evaluation") {
    std::map<Symbol, Rational> point{{Symbol::x(), Rational(1)}, {Symbol::y(), Rational(2)}};
    CHECK(rf("-x/y^2").evaluate(point) == Rational(-1, 4));
    CHECK(rf("2/x").evaluate({{Symbol::x(), Rational(2)}}) == Rational(1));
    CHECK_THROWS_AS(rf("1/x").evaluate({{Symbol::x(), Rational(0)}}), PoleAtPoint);
}

TEST_CASE("laurent detection") {
    CHECK(rf("x/y^2").is_laurent());
    CHECK(rf("3").is_laurent());
    CHECK(!rf("1/(x + y)").is_laurent());
}
