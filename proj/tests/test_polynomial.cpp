#include "odelin/polynomial.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace odelin;
using odelin::testing::random_polynomial;

namespace {

Polynomial P(const std::string& text) {
    return odelin::testing::rf(text, {"k", "l"}).numerator();
}

} // namespace

TEST_CASE("grevlex term order") {
    Symbol x = Symbol::x(), y = Symbol::y();
    Monomial mx = Monomial::of(x), my = Monomial::of(y);
    CHECK(grevlex_less(my, mx));       // x ranks above y
    CHECK(!grevlex_less(mx, my));
    CHECK(grevlex_less(mx, Monomial::of(y, 2)));  // degree dominates
    // x*y^2 vs x^2*y: rightmost difference decides
    Monomial a = Monomial::of(x) * Monomial::of(y, 2);
    Monomial b = Monomial::of(x, 2) * Monomial::of(y);
    CHECK(grevlex_less(a, b));
}

TEST_CASE("arithmetic basics") {
    Polynomial p = P("x^2 - y^2");
    Polynomial q = P("x - y");
    Polynomial sum = q + q;
    CHECK(sum == P("2*x - 2*y"));
    CHECK(p * Polynomial(Rational(0)) == Polynomial());
    CHECK((p - p).is_zero());
    CHECK(P("x + y") * P("x - y") == p);
}

TEST_CASE("gcd examples") {
    CHECK(gcd(P("x^2*y"), P("x*y^2")) == P("x*y"));
    CHECK(gcd(P("x^2 - y^2"), P("x - y")) == P("x - y"));
    // gcd with zero normalizes the other argument
    CHECK(gcd(P("2*x - 2*y"), Polynomial()) == P("x - y"));
    CHECK(gcd(Polynomial(), Polynomial()).is_zero());
    CHECK(gcd(P("3"), P("x")).is_one());
}

TEST_CASE("gcd divides both arguments exactly") {
    std::mt19937 rng(7001);
    for (int i = 0; i < 60; ++i) {
        Polynomial a = random_polynomial(rng);
        Polynomial b = random_polynomial(rng);
        Polynomial common = random_polynomial(rng, 2, 2);
        if (common.is_zero()) common = Polynomial(Rational(1));
        a = a * common;
        b = b * common;
        Polynomial g = gcd(a, b);
        if (a.is_zero() && b.is_zero()) {
            CHECK(g.is_zero());
            continue;
        }
        CHECK(exact_divide(a, g).has_value());
        CHECK(exact_divide(b, g).has_value());
        // the planted factor divides the gcd
        if (!a.is_zero() && !b.is_zero()) CHECK(exact_divide(g, gcd(common, g)).has_value());
    }
}

TEST_CASE("pseudo division identity") {
    std::mt19937 rng(7002);
    Symbol x = Symbol::x();
    for (int i = 0; i < 40; ++i) {
        Polynomial a = random_polynomial(rng, 4, 4);
        Polynomial b = random_polynomial(rng, 3, 3);
        if (b.is_zero() || !b.depends_on(x)) continue;
        if (a.degree_in(x) < b.degree_in(x)) continue;
        auto [q, r] = pseudo_divide(a, b, x);
        Polynomial lc = b.coefficient_of(x, b.degree_in(x));
        Polynomial lhs = a;
        for (std::uint32_t k = 0; k < a.degree_in(x) - b.degree_in(x) + 1; ++k) lhs = lhs * lc;
        CHECK(lhs == q * b + r);
        CHECK(r.degree_in(x) < b.degree_in(x));
    }
}

TEST_CASE("squarefree decomposition reassembles") {
    std::mt19937 rng(7003);
    for (int i = 0; i < 30; ++i) {
        Polynomial a = random_polynomial(rng, 2, 2);
        Polynomial b = random_polynomial(rng, 2, 1);
        if (a.is_zero()) a = P("x + 1");
        if (b.is_zero() || b.is_constant()) b = P("y");
        Polynomial p = a * b * b;
        auto dec = squarefree_decomposition(p);
        Polynomial rebuilt(dec.content);
        for (const auto& [f, m] : dec.factors) rebuilt = rebuilt * f.pow(m);
        CHECK(rebuilt == p);
        for (const auto& [f, m] : dec.factors) {
            // factors are squarefree: the joint gcd with all partials is constant
            Polynomial joint = f;
            for (Symbol v : f.support()) joint = gcd(joint, f.derivative(v));
            CHECK(joint.is_constant());
        }
    }
}

TEST_CASE("polynomial nth roots") {
    CHECK(*nth_root(P("x^2 - 2*x*y + y^2"), 2) == P("x - y"));
    CHECK(!nth_root(P("x"), 2).has_value());
    CHECK(*nth_root(P("8*x^3"), 3) == P("2*x"));
    CHECK(!nth_root(P("-x^2"), 2).has_value());
    CHECK(*nth_root(P("-27*x^3*y^6"), 3) == P("-3*x*y^2"));
    CHECK(*nth_root(Rational(4, 9), 2) == Rational(2, 3));
    CHECK(!nth_root(Rational(2), 2).has_value());
}

TEST_CASE("derivative and antiderivative are inverse on polynomials") {
    std::mt19937 rng(7004);
    Symbol x = Symbol::x();
    for (int i = 0; i < 25; ++i) {
        Polynomial p = random_polynomial(rng);
        CHECK(p.antiderivative(x).derivative(x) == p);
    }
}
