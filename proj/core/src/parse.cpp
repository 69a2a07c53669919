#include "odelin/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace odelin {

namespace {

struct Token {
    enum class Kind { Integer, Identifier, Derivative, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, End };
    Kind kind;
    std::size_t column;
    Rational value;     // Integer
    std::string text;   // Identifier
    int order = 0;      // Derivative
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }
    Token next() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_.column = pos_ + 1;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::End;
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            current_.kind = Token::Kind::Integer;
            current_.value = Rational(text_.substr(start, pos_ - start));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            // maximal munch on primes: y' y'' y''' y''''
            if (name == "y" && pos_ < text_.size() && text_[pos_] == '\'') {
                int order = 0;
                while (pos_ < text_.size() && text_[pos_] == '\'') {
                    ++order;
                    ++pos_;
                }
                if (order > 4) throw SyntaxError(start + 1, "derivative order above 4 is not supported");
                current_.kind = Token::Kind::Derivative;
                current_.order = order;
                return;
            }
            current_.kind = Token::Kind::Identifier;
            current_.text = name;
            return;
        }
        ++pos_;
        switch (c) {
            case '+': current_.kind = Token::Kind::Plus; return;
            case '-': current_.kind = Token::Kind::Minus; return;
            case '*': current_.kind = Token::Kind::Star; return;
            case '/': current_.kind = Token::Kind::Slash; return;
            case '^': current_.kind = Token::Kind::Caret; return;
            case '(': current_.kind = Token::Kind::LParen; return;
            case ')': current_.kind = Token::Kind::RParen; return;
            case '=': current_.kind = Token::Kind::Equals; return;
            default: throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_;
};

using AstPtr = std::unique_ptr<ExpressionAst>;

AstPtr make_node(ExpressionAst::Kind kind, std::size_t column) {
    auto n = std::make_unique<ExpressionAst>();
    n->kind = kind;
    n->column = column;
    return n;
}

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& parameters, bool allow_derivatives)
        : lexer_(text), allow_derivatives_(allow_derivatives) {
        for (const auto& p : parameters) {
            if (p == "x" || p == "y") throw std::invalid_argument("x and y are base variables, not parameters");
            params_.push_back(declare_parameter(p));
        }
    }

    AstPtr parse_equation() {
        AstPtr lhs = parse_sum();
        if (lexer_.peek().kind == Token::Kind::Equals) {
            std::size_t col = lexer_.next().column;
            AstPtr rhs = parse_sum();
            auto n = make_node(ExpressionAst::Kind::Sub, col);
            n->lhs = std::move(lhs);
            n->rhs = std::move(rhs);
            lhs = std::move(n);
        }
        expect(Token::Kind::End, "end of input");
        return lhs;
    }

private:
    void expect(Token::Kind kind, const std::string& what) {
        if (lexer_.peek().kind != kind)
            throw SyntaxError(lexer_.peek().column, "expected " + what);
        lexer_.next();
    }

    AstPtr parse_sum() {
        AstPtr lhs = parse_product();
        while (true) {
            auto kind = lexer_.peek().kind;
            if (kind != Token::Kind::Plus && kind != Token::Kind::Minus) return lhs;
            Token op = lexer_.next();
            AstPtr rhs = parse_product();
            auto n = make_node(kind == Token::Kind::Plus ? ExpressionAst::Kind::Add : ExpressionAst::Kind::Sub,
                               op.column);
            n->lhs = std::move(lhs);
            n->rhs = std::move(rhs);
            lhs = std::move(n);
        }
    }

    AstPtr parse_product() {
        AstPtr lhs = parse_unary();
        while (true) {
            auto kind = lexer_.peek().kind;
            if (kind != Token::Kind::Star && kind != Token::Kind::Slash) return lhs;
            Token op = lexer_.next();
            AstPtr rhs = parse_unary();
            auto n = make_node(kind == Token::Kind::Star ? ExpressionAst::Kind::Mul : ExpressionAst::Kind::Div,
                               op.column);
            n->lhs = std::move(lhs);
            n->rhs = std::move(rhs);
            lhs = std::move(n);
        }
    }

    AstPtr parse_unary() {
        if (lexer_.peek().kind == Token::Kind::Minus) {
            Token op = lexer_.next();
            auto n = make_node(ExpressionAst::Kind::Neg, op.column);
            n->lhs = parse_unary();
            return n;
        }
        return parse_power();
    }

    AstPtr parse_power() {
        AstPtr base = parse_atom();
        if (lexer_.peek().kind != Token::Kind::Caret) return base;
        Token op = lexer_.next();
        bool parens = false;
        if (lexer_.peek().kind == Token::Kind::LParen) {
            parens = true;
            lexer_.next();
        }
        if (lexer_.peek().kind != Token::Kind::Integer)
            throw SyntaxError(lexer_.peek().column, "expected a nonnegative integer exponent");
        Token exp = lexer_.next();
        if (parens) expect(Token::Kind::RParen, "')'");
        auto n = make_node(ExpressionAst::Kind::Pow, op.column);
        n->lhs = std::move(base);
        n->exponent = static_cast<std::uint32_t>(exp.value.get_num().get_ui());
        return n;
    }

    AstPtr parse_atom() {
        Token t = lexer_.peek();
        switch (t.kind) {
            case Token::Kind::Integer: {
                lexer_.next();
                auto n = make_node(ExpressionAst::Kind::Integer, t.column);
                n->value = t.value;
                return n;
            }
            case Token::Kind::Derivative: {
                lexer_.next();
                if (!allow_derivatives_)
                    throw SyntaxError(t.column, "derivative symbols are not allowed here");
                auto n = make_node(ExpressionAst::Kind::Derivative, t.column);
                n->derivative_order = t.order;
                return n;
            }
            case Token::Kind::Identifier: {
                lexer_.next();
                auto n = make_node(ExpressionAst::Kind::Variable, t.column);
                if (t.text == "x") {
                    n->symbol = Symbol::x();
                } else if (t.text == "y") {
                    n->symbol = Symbol::y();
                } else {
                    auto s = find_symbol(t.text);
                    bool declared = false;
                    if (s) {
                        for (Symbol p : params_)
                            if (p == *s) declared = true;
                    }
                    if (!declared) throw UnknownSymbol(t.column, t.text);
                    n->symbol = *s;
                }
                return n;
            }
            case Token::Kind::LParen: {
                lexer_.next();
                AstPtr inner = parse_sum();
                expect(Token::Kind::RParen, "')'");
                return inner;
            }
            default:
                throw SyntaxError(t.column, "expected a term");
        }
    }

    Lexer lexer_;
    bool allow_derivatives_;
    std::vector<Symbol> params_;
};

JetPolynomial lower(const ExpressionAst& n) {
    switch (n.kind) {
        case ExpressionAst::Kind::Integer:
            return JetPolynomial(RationalFunction(n.value));
        case ExpressionAst::Kind::Variable:
            return JetPolynomial(RationalFunction::variable(n.symbol));
        case ExpressionAst::Kind::Derivative:
            return JetPolynomial::derivative_symbol(n.derivative_order);
        case ExpressionAst::Kind::Add:
            return lower(*n.lhs) + lower(*n.rhs);
        case ExpressionAst::Kind::Sub:
            return lower(*n.lhs) - lower(*n.rhs);
        case ExpressionAst::Kind::Mul:
            return lower(*n.lhs) * lower(*n.rhs);
        case ExpressionAst::Kind::Div: {
            JetPolynomial num = lower(*n.lhs);
            JetPolynomial den = lower(*n.rhs);
            if (den.order() > 0) throw DerivativeInDenominator(n.column);
            if (den.is_zero()) throw SyntaxError(n.column, "division by zero");
            RationalFunction d = den.coefficient(DerivMonomial::one());
            return num.scale(RationalFunction(Rational(1)) / d);
        }
        case ExpressionAst::Kind::Pow: {
            JetPolynomial base = lower(*n.lhs);
            return base.pow(n.exponent);
        }
        case ExpressionAst::Kind::Neg:
            return -lower(*n.lhs);
    }
    throw std::logic_error("unreachable");
}

} // namespace

std::unique_ptr<ExpressionAst> parse_ast(const std::string& text,
                                         const std::vector<std::string>& parameters,
                                         bool allow_derivatives) {
    Parser p(text, parameters, allow_derivatives);
    return p.parse_equation();
}

JetPolynomial parse_raw(const std::string& text, const std::vector<std::string>& parameters) {
    return lower(*parse_ast(text, parameters, true));
}

JetPolynomial parse(const std::string& text, const std::vector<std::string>& parameters) {
    JetPolynomial f = parse_raw(text, parameters);
    if (f.is_zero()) return f;
    return normalize_monic(f);
}

RationalFunction parse_rational(const std::string& text, const std::vector<std::string>& parameters) {
    JetPolynomial f = lower(*parse_ast(text, parameters, false));
    if (f.is_zero()) return RationalFunction();
    return f.coefficient(DerivMonomial::one());
}

namespace {

std::string derivative_factor_string(const DerivMonomial& m) {
    static const char* names[4] = {"y'", "y''", "y'''", "y''''"};
    std::string out;
    for (int k = 4; k >= 1; --k) {
        std::uint8_t e = m.e[k - 1];
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += names[k - 1];
        if (e > 1) out += "^" + std::to_string(static_cast<int>(e));
    }
    return out;
}

// renders |coeff| * deriv with the sign reported separately
std::pair<bool, std::string> term_string(const RationalFunction& coeff, const DerivMonomial& m) {
    std::string deriv = derivative_factor_string(m);
    const Polynomial& num = coeff.numerator();
    bool negative = num.leading_coefficient() < 0;
    RationalFunction mag = negative ? -coeff : coeff;
    if (deriv.empty()) {
        // top-level sums need parentheses once the sign is pulled out
        if (mag.is_polynomial() && mag.numerator().term_count() > 1)
            return {negative, "(" + mag.to_string() + ")"};
        return {negative, mag.to_string()};
    }
    if (mag.is_one()) return {negative, deriv};

    const Polynomial& mn = mag.numerator();
    const Polynomial& md = mag.denominator();
    std::ostringstream os;
    if (mn.is_one()) {
        os << deriv;
    } else if (mn.term_count() == 1) {
        os << mn.to_string() << "*" << deriv;
    } else {
        os << "(" << mn.to_string() << ")*" << deriv;
    }
    if (!md.is_one()) {
        std::string d = md.to_string();
        bool simple = md.term_count() == 1 && d.find('*') == std::string::npos;
        os << "/" << (simple ? d : "(" + d + ")");
    }
    return {negative, os.str()};
}

} // namespace

std::string print_canonical(const JetPolynomial& f) {
    if (f.is_zero()) return "0";
    // descending derivative order, then descending u1-degree
    std::vector<DerivMonomial> order;
    for (const auto& [m, c] : f.terms()) order.push_back(m);
    auto rank = [](const DerivMonomial& m) {
        return std::array<std::uint8_t, 4>{m.e[3], m.e[2], m.e[1], m.e[0]};
    };
    std::sort(order.begin(), order.end(), [&](const DerivMonomial& a, const DerivMonomial& b) {
        return rank(a) > rank(b);
    });
    std::ostringstream os;
    bool first = true;
    for (const DerivMonomial& m : order) {
        auto [negative, body] = term_string(f.coefficient(m), m);
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        os << body;
    }
    return os.str();
}

} // namespace odelin
