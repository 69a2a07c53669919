#ifndef ODELIN_PARSE_HPP
#define ODELIN_PARSE_HPP

#include "odelin/jet.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace odelin {

struct SyntaxError : std::runtime_error {
    std::size_t column; // 1-based
    SyntaxError(std::size_t col, const std::string& what)
        : std::runtime_error("column " + std::to_string(col) + ": " + what), column(col) {}
};

struct DerivativeInDenominator : std::runtime_error {
    std::size_t column;
    explicit DerivativeInDenominator(std::size_t col)
        : std::runtime_error("column " + std::to_string(col) + ": derivative symbol in a denominator"),
          column(col) {}
};

struct UnknownSymbol : std::runtime_error {
    std::size_t column;
    std::string symbol;
    UnknownSymbol(std::size_t col, const std::string& s)
        : std::runtime_error("column " + std::to_string(col) + ": unknown symbol '" + s +
                             "' (declare parameters explicitly)"),
          column(col), symbol(s) {}
};

/// Arithmetic expression tree produced by the parser.
struct ExpressionAst {
    enum class Kind { Integer, Variable, Derivative, Add, Sub, Mul, Div, Pow, Neg };
    Kind kind;
    std::size_t column = 0;
    Rational value;                // Integer
    Symbol symbol{0};              // Variable
    int derivative_order = 0;      // Derivative (1..4)
    std::uint32_t exponent = 0;    // Pow
    std::unique_ptr<ExpressionAst> lhs, rhs;
};

/// Parses an ODE expression (optionally with a top-level "= expr") into a
/// monic jet polynomial. Parameters must be declared up front.
JetPolynomial parse(const std::string& text, const std::vector<std::string>& parameters);

/// Same parse but without monic normalization (the raw left-hand side).
JetPolynomial parse_raw(const std::string& text, const std::vector<std::string>& parameters);

/// Parses a coefficient expression; derivative tokens are rejected.
RationalFunction parse_rational(const std::string& text, const std::vector<std::string>& parameters);

/// Deterministic canonical text: terms sorted by descending derivative order
/// then descending u1-degree; parse(print_canonical(f)) == f.
std::string print_canonical(const JetPolynomial& f);

/// Parses the grammar into an AST without lowering (mainly for tooling).
std::unique_ptr<ExpressionAst> parse_ast(const std::string& text,
                                         const std::vector<std::string>& parameters,
                                         bool allow_derivatives);

} // namespace odelin

#endif
