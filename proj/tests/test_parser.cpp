#include "odelin/parse.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace odelin;
using odelin::testing::rf;

TEST_CASE("parse a fourth-order equation") {
    JetPolynomial f = parse("y'''' - 6*x*y'^5 + 12*y'/x^3", {});
    CHECK(f.coefficient(0, 0, 0, 1).is_one());
    CHECK(f.coefficient(5) == rf("-6*x"));
    CHECK(f.coefficient(1) == rf("12/x^3"));
    CHECK(f.order() == 4);
    CHECK(f.terms().size() == 3);
}

TEST_CASE("parse with parameters and an equals sign") {
    JetPolynomial f = parse("y'' - 2*y'^2/y + k*y'/2 + l*y = 0", {"k", "l"});
    CHECK(f.coefficient(0, 1).is_one());
    CHECK(f.coefficient(2) == rf("-2/y"));
    CHECK(f.coefficient(1) == rf("k/2", {"k"}));
    CHECK(f.coefficient(0) == rf("l*y", {"l"}));
    // right-hand sides move to the left
    CHECK(parse("y'' = 2*y'", {}) == parse("y'' - 2*y'", {}));
}

TEST_CASE("rejected inputs") {
    CHECK_THROWS_AS(parse("y'/(y' + 1)", {}), DerivativeInDenominator);
    CHECK_THROWS_AS(parse("y'' + q*y'", {}), UnknownSymbol);
    CHECK_THROWS_AS(parse("y'' +", {}), SyntaxError);
    CHECK_THROWS_AS(parse("y'' ^ y", {}), SyntaxError);
    CHECK_THROWS_AS(parse("y'''''", {}), SyntaxError); // order above 4
    try {
        parse("y'' +", {});
    } catch (const SyntaxError& e) {
        CHECK(e.column == 6);
    }
}

TEST_CASE("rational front-end") {
    CHECK(parse_rational("-x/y^2", {}) == rf("-x/y^2"));
    CHECK(parse_rational("2/x", {}) == rf("2/x"));
    CHECK_THROWS_AS(parse_rational("y'", {}), SyntaxError);
}

TEST_CASE("whitespace and parentheses do not matter") {
    CHECK(parse("y''-2*y'^2/y", {}) == parse("  y''   -  (2*(y'^2))/y ", {}));
    CHECK(parse_rational("-(x)/(y^2)", {}) == parse_rational("-x/y^2", {}));
}

TEST_CASE("canonical printing round trips") {
    std::vector<std::pair<std::string, std::vector<std::string>>> inputs = {
        {"y''''", {}},
        {"y'' - x*y'^3", {}},
        {"y'''' - 6*x*y'^5 + 12*y'/x^3", {}},
        {"y'' - 2*y'^2/y + k*y'/2 + l*y = 0", {"k", "l"}},
        {"y'''' + (3*x*y'^2 + 2/x)*y''' + 6*x*y'*y''^2 + (6*y'^2 - 4/x^2)*y'' + 4*y'/x^3", {}},
    };
    for (const auto& [text, params] : inputs) {
        JetPolynomial f = parse(text, params);
        std::string printed = print_canonical(f);
        CHECK(parse(printed, params) == f);
        // printing is a fixed point
        CHECK(print_canonical(parse(printed, params)) == printed);
    }
}

TEST_CASE("printing uses descending derivative order") {
    JetPolynomial f = parse("y'' - x*y'^3", {});
    CHECK(print_canonical(f) == "y'' - x*y'^3");
    CHECK(print_canonical(parse("y''''", {})) == "y''''");
    CHECK(print_canonical(JetPolynomial()) == "0");
}
