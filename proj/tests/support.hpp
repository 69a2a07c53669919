#ifndef ODELIN_TESTS_SUPPORT_HPP
#define ODELIN_TESTS_SUPPORT_HPP

#include "odelin/linearize.hpp"
#include "odelin/parse.hpp"

#include <random>

namespace odelin::testing {

inline RationalFunction rf(const std::string& text, const std::vector<std::string>& params = {}) {
    return parse_rational(text, params);
}

/// A signed monomial amplitude * x^m * y^n with small exponents; the workhorse
/// of the randomized property tests.
inline RationalFunction random_monomial(std::mt19937& rng, int exp_range = 2) {
    static const Rational amplitudes[6] = {Rational(1),     Rational(-1),    Rational(2),
                                           Rational(-2),    Rational(1, 2),  Rational(-1, 2)};
    std::uniform_int_distribution<int> amp(0, 5), expd(-exp_range, exp_range);
    int m = expd(rng), n = expd(rng);
    Polynomial num(amplitudes[amp(rng)]), den(Rational(1));
    if (m > 0) num = num * Polynomial::variable(Symbol::x(), static_cast<std::uint32_t>(m));
    if (m < 0) den = den * Polynomial::variable(Symbol::x(), static_cast<std::uint32_t>(-m));
    if (n > 0) num = num * Polynomial::variable(Symbol::y(), static_cast<std::uint32_t>(n));
    if (n < 0) den = den * Polynomial::variable(Symbol::y(), static_cast<std::uint32_t>(-n));
    return RationalFunction(num, den);
}

/// Small random polynomial in up to `vars` symbols (x, y, then parameters).
inline Polynomial random_polynomial(std::mt19937& rng, int max_terms = 3, int max_degree = 3,
                                    int vars = 2) {
    std::uniform_int_distribution<int> terms(1, max_terms), degd(0, max_degree),
        coeff(-4, 4);
    Polynomial p;
    int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<std::uint32_t> exps(static_cast<std::size_t>(vars), 0);
        int budget = degd(rng);
        for (int i = 0; i < vars && budget > 0; ++i) {
            std::uniform_int_distribution<int> pick(0, budget);
            int e = pick(rng);
            exps[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(e);
            budget -= e;
        }
        int c = coeff(rng);
        if (c == 0) c = 1;
        p.add_term(Monomial{exps}, Rational(c));
    }
    return p;
}

inline RationalFunction random_rational_function(std::mt19937& rng) {
    Polynomial num = random_polynomial(rng);
    Polynomial den = random_polynomial(rng);
    if (den.is_zero()) den = Polynomial(Rational(1));
    return RationalFunction(num, den);
}

inline RootCoefficients random_root(std::mt19937& rng, bool zero_c) {
    RootCoefficients root;
    root.c = zero_c ? RationalFunction() : random_monomial(rng);
    root.g = random_monomial(rng);
    root.h = random_monomial(rng);
    root.d = random_monomial(rng);
    return root;
}

} // namespace odelin::testing

#endif
