#ifndef ODELIN_SOLVE_UTIL_HPP
#define ODELIN_SOLVE_UTIL_HPP

// Internal helpers shared by the extraction and gauge-search solvers.

#include "odelin/rational_function.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace odelin::detail {

struct LaurentTerm {
    std::vector<std::int64_t> exps;
    Rational coeff;
};

inline std::optional<std::vector<LaurentTerm>> laurent_terms(const RationalFunction& f) {
    if (f.is_zero()) return std::vector<LaurentTerm>{};
    if (!f.is_laurent()) return std::nullopt;
    const Monomial& dm = f.denominator().leading_monomial();
    Rational dc = f.denominator().leading_coefficient();
    std::vector<LaurentTerm> out;
    for (const auto& [m, c] : f.numerator().terms()) {
        LaurentTerm t;
        std::size_t width = std::max(m.exps.size(), dm.exps.size());
        t.exps.assign(width, 0);
        for (std::size_t i = 0; i < m.exps.size(); ++i) t.exps[i] += m.exps[i];
        for (std::size_t i = 0; i < dm.exps.size(); ++i) t.exps[i] -= dm.exps[i];
        while (!t.exps.empty() && t.exps.back() == 0) t.exps.pop_back();
        t.coeff = c / dc;
        out.push_back(std::move(t));
    }
    return out;
}

inline RationalFunction laurent_monomial(const std::vector<std::int64_t>& exps, const Rational& coeff) {
    Polynomial num(coeff), den(Rational(1));
    for (std::size_t i = 0; i < exps.size(); ++i) {
        Symbol v{static_cast<std::uint32_t>(i)};
        if (exps[i] > 0)
            num = num * Polynomial::variable(v, static_cast<std::uint32_t>(exps[i]));
        else if (exps[i] < 0)
            den = den * Polynomial::variable(v, static_cast<std::uint32_t>(-exps[i]));
    }
    return RationalFunction(num, den);
}

// falling factorial a(a-1)...(a-i+1) over signed exponents
inline Rational falling(std::int64_t a, unsigned i) {
    Rational r(1);
    for (unsigned k = 0; k < i; ++k) r *= Rational(static_cast<long>(a - k));
    return r;
}

inline std::vector<Rational> divisors_up_to(const mpz_class& n_in, std::size_t cap = 4096) {
    std::vector<mpz_class> divs{1};
    mpz_class n = abs(n_in);
    mpz_class p = 2;
    while (n > 1 && divs.size() < cap) {
        if (mpz_cmp_ui(p.get_mpz_t(), 1000000u) > 0) {
            std::size_t sz = divs.size();
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * n);
            break;
        }
        if (n % p == 0) {
            std::size_t sz = divs.size();
            mpz_class pe = 1;
            while (n % p == 0) {
                n /= p;
                pe *= p;
                for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pe);
            }
        }
        p += (p == 2) ? 1 : 2;
    }
    std::vector<Rational> out;
    out.reserve(divs.size());
    for (const auto& d : divs) out.emplace_back(d);
    return out;
}

// rational roots of sum coeffs[k] * z^k (exact, by the rational root theorem)
inline std::vector<Rational> rational_roots(std::vector<Rational> coeffs) {
    std::vector<Rational> roots;
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.size() <= 1) return roots;
    std::size_t shift = 0;
    while (shift < coeffs.size() && coeffs[shift] == 0) ++shift;
    if (shift > 0) {
        roots.emplace_back(0);
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(shift));
        if (coeffs.size() <= 1) return roots;
    }
    mpz_class lcm = 1;
    for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> ic;
    ic.reserve(coeffs.size());
    for (const auto& c : coeffs) ic.push_back(mpz_class(c * Rational(lcm)));
    auto eval = [&](const Rational& z) {
        Rational v(0);
        for (std::size_t k = ic.size(); k-- > 0;) v = v * z + Rational(ic[k]);
        return v;
    };
    std::set<Rational> seen;
    for (const Rational& p : divisors_up_to(ic.front())) {
        for (const Rational& q : divisors_up_to(ic.back())) {
            for (int sgn : {1, -1}) {
                Rational cand = Rational(sgn) * p / q;
                cand.canonicalize();
                if (!seen.insert(cand).second) continue;
                if (eval(cand) == 0) roots.push_back(cand);
            }
        }
    }
    return roots;
}

} // namespace odelin::detail

#endif
