#ifndef ODELIN_JET_HPP
#define ODELIN_JET_HPP

#include "odelin/rational_function.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace odelin {

struct OrderOverflow : std::runtime_error {
    OrderOverflow() : std::runtime_error("total derivative would exceed order 4") {}
};

struct ZeroLeadingCoefficient : std::runtime_error {
    ZeroLeadingCoefficient() : std::runtime_error("leading coefficient is zero") {}
};

/// Exponent vector over the derivative indeterminates u1=y', u2=y'', u3=y''',
/// u4=y''''.
struct DerivMonomial {
    std::array<std::uint8_t, 4> e{0, 0, 0, 0};

    static DerivMonomial one() { return {}; }
    static DerivMonomial of(int k, std::uint8_t exp = 1);

    int order() const;
    bool is_one() const { return e == std::array<std::uint8_t, 4>{0, 0, 0, 0}; }
    DerivMonomial operator*(const DerivMonomial& o) const;

    auto operator<=>(const DerivMonomial&) const = default;
};

/// Differential polynomial: an ODE represented as a polynomial in the
/// derivative indeterminates with rational-function coefficients in
/// (x, y, parameters). The equation is understood as the polynomial = 0.
class JetPolynomial {
public:
    using TermMap = std::map<DerivMonomial, RationalFunction>;

    JetPolynomial() = default;
    explicit JetPolynomial(const RationalFunction& c);
    static JetPolynomial derivative_symbol(int k, std::uint8_t exp = 1);
    static JetPolynomial term(const RationalFunction& c, const DerivMonomial& m);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int order() const;

    /// Coefficient of u1^a u2^b u3^c u4^d (zero function if absent).
    RationalFunction coefficient(std::uint8_t a, std::uint8_t b = 0, std::uint8_t c = 0,
                                 std::uint8_t d = 0) const;
    RationalFunction coefficient(const DerivMonomial& m) const;

    void add_term(const DerivMonomial& m, const RationalFunction& c);

    JetPolynomial operator-() const;
    JetPolynomial operator+(const JetPolynomial& o) const;
    JetPolynomial operator-(const JetPolynomial& o) const;
    JetPolynomial operator*(const JetPolynomial& o) const;
    JetPolynomial scale(const RationalFunction& c) const;
    JetPolynomial pow(std::uint32_t n) const;
    bool operator==(const JetPolynomial& o) const { return terms_ == o.terms_; }

    /// Leading term under (highest derivative, then highest degree): compare
    /// exponent tuples (e4, e3, e2, e1) lexicographically.
    DerivMonomial leading_monomial() const;

private:
    TermMap terms_;
};

/// Total derivative D_x f = f_x + u1 f_y + sum_k u_{k+1} df/du_k. Throws
/// OrderOverflow when the input has order 4.
JetPolynomial total_derivative(const JetPolynomial& f);

/// Replaces every occurrence of u_k by `replacement` (whose order must be
/// below k), expanding and recollecting.
JetPolynomial substitute_derivative(const JetPolynomial& f, int k, const JetPolynomial& replacement);

/// Divides by the coefficient of the leading term.
JetPolynomial normalize_monic(const JetPolynomial& f);

/// Shape summary used by the classifier: for each derivative-monomial pattern
/// (keyed by the exponents of u2, u3, u4) the largest u1-degree carried by a
/// nonzero coefficient.
struct ShapeDescriptor {
    int order = 0;
    /// key: (e2, e3, e4), value: max u1 exponent seen with that pattern
    std::map<std::array<std::uint8_t, 3>, std::uint8_t> sectors;

    std::optional<int> sector_degree(std::uint8_t e2, std::uint8_t e3, std::uint8_t e4) const;
    std::optional<int> u3_linear_degree() const { return sector_degree(0, 1, 0); }
    std::optional<int> u2_squared_degree() const { return sector_degree(2, 0, 0); }
    std::optional<int> u2_linear_degree() const { return sector_degree(1, 0, 0); }
    std::optional<int> pure_degree() const { return sector_degree(0, 0, 0); }
};

ShapeDescriptor shape(const JetPolynomial& f);

} // namespace odelin

#endif
