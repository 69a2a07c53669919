#include "odelin/rational_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace odelin {

RationalFunction::RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) { normalize(); }

RationalFunction::RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) { normalize(); }

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
    if (den.is_zero()) throw DivisionByZero();
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *exact_divide(num_, g);
        den_ = *exact_divide(den_, g);
    }
    auto ns = primitive_split(num_);
    auto ds = primitive_split(den_);
    // overall scalar ns.factor/ds.factor = +/- p/q with p,q positive coprime
    Rational scalar = ns.factor / ds.factor;
    Rational mag = abs(scalar);
    Rational num_scale(mag.get_num());
    if (scalar < 0) num_scale = -num_scale;
    num_ = ns.primitive.scale(num_scale);
    den_ = ds.primitive.scale(Rational(mag.get_den()));
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw std::logic_error("not a constant rational function");
    if (num_.is_zero()) return Rational(0);
    return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(std::int32_t n) const {
    if (n == 0) return RationalFunction(Rational(1));
    bool invert = n < 0;
    std::uint32_t k = invert ? static_cast<std::uint32_t>(-static_cast<std::int64_t>(n))
                             : static_cast<std::uint32_t>(n);
    RationalFunction r(num_.pow(k), den_.pow(k));
    if (invert) {
        if (r.is_zero()) throw DivisionByZero();
        return RationalFunction(r.den_, r.num_);
    }
    return r;
}

RationalFunction RationalFunction::derivative(Symbol v) const {
    if (is_polynomial()) return RationalFunction(num_.derivative(v), den_);
    Polynomial n = num_.derivative(v) * den_ - num_ * den_.derivative(v);
    return RationalFunction(n, den_ * den_);
}

std::vector<Symbol> RationalFunction::support() const {
    std::vector<Symbol> out = num_.support();
    for (Symbol v : den_.support())
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

Rational RationalFunction::evaluate(const std::map<Symbol, Rational>& point) const {
    std::uint32_t width = 0;
    for (const auto& [s, v] : point) width = std::max(width, s.id + 1);
    for (Symbol s : support())
        if (!point.count(s)) throw std::invalid_argument("evaluation point missing symbol " + s.name());
    std::vector<Rational> vec(width, Rational(0));
    for (const auto& [s, v] : point) vec[s.id] = v;
    Rational den = den_.evaluate(vec);
    if (den == 0) throw PoleAtPoint();
    return num_.evaluate(vec) / den;
}

double RationalFunction::evaluate_double(double x, double y) const {
    auto eval = [&](const Polynomial& p) {
        double total = 0.0;
        for (const auto& [m, c] : p.terms()) {
            if (m.exps.size() > 2) throw std::invalid_argument("numeric evaluation supports x,y only");
            double t = c.get_d();
            if (m.exp(Symbol::x()) != 0) t *= std::pow(x, m.exp(Symbol::x()));
            if (m.exp(Symbol::y()) != 0) t *= std::pow(y, m.exp(Symbol::y()));
            total += t;
        }
        return total;
    };
    double den = eval(den_);
    if (den == 0.0 || !std::isfinite(den)) throw PoleAtPoint();
    return eval(num_) / den;
}

RationalFunction RationalFunction::substitute(Symbol v, const Rational& value) const {
    return RationalFunction(num_.substitute(v, value), den_.substitute(v, value));
}

std::string RationalFunction::to_string() const {
    if (num_.is_zero()) return "0";
    if (den_.is_one()) return num_.to_string();
    std::ostringstream os;
    if (num_.term_count() == 1) {
        os << num_.to_string();
    } else {
        os << "(" << num_.to_string() << ")";
    }
    os << "/";
    std::string d = den_.to_string();
    bool simple = den_.term_count() == 1 && d.find('*') == std::string::npos;
    if (simple) {
        os << d;
    } else {
        os << "(" << d << ")";
    }
    return os.str();
}

std::optional<RationalFunction> nth_root(const RationalFunction& f, std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("0th root");
    if (n == 1 || f.is_zero()) return f;
    // in canonical form an n-th power has numerator and denominator that are
    // separately n-th powers (up to the sign carried by the numerator)
    auto nr = nth_root(f.numerator(), n);
    auto dr = nth_root(f.denominator(), n);
    if (!nr || !dr) return std::nullopt;
    RationalFunction r(*nr, *dr);
    if (r.pow(static_cast<std::int32_t>(n)) == f) return r;
    return std::nullopt;
}

} // namespace odelin
