#ifndef ODELIN_POLYNOMIAL_HPP
#define ODELIN_POLYNOMIAL_HPP

#include "odelin/symbol.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace odelin {

using Rational = mpq_class;

std::string rational_to_string(const Rational& q);

/// Exponent vector over the declared symbols, trailing zeros trimmed.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> e);
    static Monomial one() { return Monomial{}; }
    static Monomial of(Symbol v, std::uint32_t k = 1);

    std::uint32_t exp(Symbol v) const;
    std::uint64_t total_degree() const;
    bool is_one() const { return exps.empty(); }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Requires divides(o) in the caller's direction: (*this) / o.
    Monomial divide_by(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// Graded reverse lexicographic order over the symbol list (x before y before
/// parameters). Used as the canonical term order everywhere.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};

/// Multivariate polynomial with exact rational coefficients. Zero coefficients
/// are never stored; equality is structural equality of the term map.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexLess>;

    Polynomial() = default;
    explicit Polynomial(const Rational& c);
    explicit Polynomial(long c) : Polynomial(Rational(c)) {}
    static Polynomial variable(Symbol v, std::uint32_t k = 1);
    static Polynomial term(const Rational& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value; requires is_constant().
    Rational constant_value() const;
    bool is_one() const { return is_constant() && !is_zero() && constant_value() == 1; }
    std::size_t term_count() const { return terms_.size(); }

    const TermMap& terms() const { return terms_; }
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial scale(const Rational& c) const;
    Polynomial pow(std::uint32_t n) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    /// Largest power of v occurring in any term.
    std::uint32_t degree_in(Symbol v) const;
    /// Coefficient of v^k, a polynomial in the remaining symbols.
    Polynomial coefficient_of(Symbol v, std::uint32_t k) const;
    bool depends_on(Symbol v) const { return degree_in(v) > 0; }
    std::vector<Symbol> support() const;

    Polynomial derivative(Symbol v) const;
    /// Term-wise antiderivative in v; fails on v-exponent -1 (never occurs for
    /// plain polynomials) — total, returns exact result.
    Polynomial antiderivative(Symbol v) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Partial evaluation: replaces one symbol by a rational value.
    Polynomial substitute(Symbol v, const Rational& value) const;

    std::string to_string() const;

private:
    TermMap terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

/// Exact multivariate division; nullopt when q does not divide p.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q);

/// Pseudo-remainder and pseudo-quotient of A by B viewed as univariate in v:
/// lc(B)^(deg A - deg B + 1) * A = Q*B + R with deg_v R < deg_v B.
struct PseudoDivision {
    Polynomial quotient;
    Polynomial remainder;
};
PseudoDivision pseudo_divide(const Polynomial& A, const Polynomial& B, Symbol v);

/// GCD with integer-primitive normalization and positive leading coefficient;
/// gcd(p, 0) is p normalized the same way. Subresultant PRS, recursing over
/// the symbols in their fixed order.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// Splits p as factor * primitive where primitive has coprime integer
/// coefficients and positive leading coefficient.
struct PrimitiveSplit {
    Rational factor;
    Polynomial primitive;
};
PrimitiveSplit primitive_split(const Polynomial& p);

/// Squarefree decomposition p = content * prod(factors[i].first ^ factors[i].second)
/// with pairwise coprime squarefree primitive factors of positive degree.
struct SquareFreeDecomposition {
    Rational content;
    std::vector<std::pair<Polynomial, std::uint32_t>> factors;
};
SquareFreeDecomposition squarefree_decomposition(const Polynomial& p);

/// Exact n-th root of a polynomial, if it exists (unique up to sign for even
/// n; the returned root has positive leading coefficient).
std::optional<Polynomial> nth_root(const Polynomial& p, std::uint32_t n);

/// Exact n-th root of a rational number (for even n requires a >= 0 and
/// returns the nonnegative root).
std::optional<Rational> nth_root(const Rational& a, std::uint32_t n);

} // namespace odelin

#endif
