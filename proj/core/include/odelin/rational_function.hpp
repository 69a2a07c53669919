#ifndef ODELIN_RATIONAL_FUNCTION_HPP
#define ODELIN_RATIONAL_FUNCTION_HPP

#include "odelin/polynomial.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace odelin {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero rational function") {}
};

struct PoleAtPoint : std::runtime_error {
    PoleAtPoint() : std::runtime_error("denominator vanishes at evaluation point") {}
};

/// Exact multivariate rational function in canonical form: numerator and
/// denominator are coprime, both have integer coefficients with coprime
/// contents, and the denominator's leading coefficient is positive. With this
/// normalization structural equality coincides with mathematical equality.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    explicit RationalFunction(const Rational& c);
    explicit RationalFunction(long c) : RationalFunction(Rational(c)) {}
    explicit RationalFunction(const Polynomial& p);
    RationalFunction(const Polynomial& num, const Polynomial& den);
    static RationalFunction variable(Symbol v) { return RationalFunction(Polynomial::variable(v)); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    RationalFunction pow(std::int32_t n) const;

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    RationalFunction derivative(Symbol v) const;
    bool depends_on(Symbol v) const { return num_.depends_on(v) || den_.depends_on(v); }
    std::vector<Symbol> support() const;

    /// Exact value at a point covering every symbol in the support.
    Rational evaluate(const std::map<Symbol, Rational>& point) const;
    double evaluate_double(double x, double y) const;

    /// Partial evaluation: replaces one symbol by a rational value.
    RationalFunction substitute(Symbol v, const Rational& value) const;

    /// True when the denominator is a single term, i.e. the function is a
    /// finite sum of Laurent monomials.
    bool is_laurent() const { return den_.term_count() == 1; }

    std::string to_string() const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

/// Exact n-th root, if one exists in the rational function field. For even n
/// the branch with positive leading numerator coefficient is returned.
std::optional<RationalFunction> nth_root(const RationalFunction& f, std::uint32_t n);

/// Log-free antiderivative with respect to v, computed by Hermite-style
/// reduction. Returns nullopt when the integral has a logarithmic part. The
/// result has no additive part independent of v.
std::optional<RationalFunction> antiderivative(const RationalFunction& f, Symbol v);

} // namespace odelin

#endif
