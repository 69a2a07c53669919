#include "odelin/jet.hpp"

namespace odelin {

DerivMonomial DerivMonomial::of(int k, std::uint8_t exp) {
    if (k < 1 || k > 4) throw std::invalid_argument("derivative index out of range");
    DerivMonomial m;
    m.e[k - 1] = exp;
    return m;
}

int DerivMonomial::order() const {
    for (int k = 4; k >= 1; --k)
        if (e[k - 1] > 0) return k;
    return 0;
}

DerivMonomial DerivMonomial::operator*(const DerivMonomial& o) const {
    DerivMonomial m;
    for (int i = 0; i < 4; ++i) m.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
    return m;
}

JetPolynomial::JetPolynomial(const RationalFunction& c) {
    if (!c.is_zero()) terms_.emplace(DerivMonomial::one(), c);
}

JetPolynomial JetPolynomial::derivative_symbol(int k, std::uint8_t exp) {
    JetPolynomial f;
    f.terms_.emplace(DerivMonomial::of(k, exp), RationalFunction(Rational(1)));
    return f;
}

JetPolynomial JetPolynomial::term(const RationalFunction& c, const DerivMonomial& m) {
    JetPolynomial f;
    if (!c.is_zero()) f.terms_.emplace(m, c);
    return f;
}

int JetPolynomial::order() const {
    int o = 0;
    for (const auto& [m, c] : terms_) o = std::max(o, m.order());
    return o;
}

RationalFunction JetPolynomial::coefficient(std::uint8_t a, std::uint8_t b, std::uint8_t c,
                                            std::uint8_t d) const {
    return coefficient(DerivMonomial{{a, b, c, d}});
}

RationalFunction JetPolynomial::coefficient(const DerivMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RationalFunction() : it->second;
}

void JetPolynomial::add_term(const DerivMonomial& m, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

JetPolynomial JetPolynomial::operator-() const {
    JetPolynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

JetPolynomial JetPolynomial::operator+(const JetPolynomial& o) const {
    JetPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

JetPolynomial JetPolynomial::operator-(const JetPolynomial& o) const {
    JetPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

JetPolynomial JetPolynomial::operator*(const JetPolynomial& o) const {
    JetPolynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

JetPolynomial JetPolynomial::scale(const RationalFunction& c) const {
    JetPolynomial r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

JetPolynomial JetPolynomial::pow(std::uint32_t n) const {
    JetPolynomial r(RationalFunction(Rational(1)));
    JetPolynomial base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

DerivMonomial JetPolynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero jet polynomial");
    auto rank = [](const DerivMonomial& m) {
        return std::array<std::uint8_t, 4>{m.e[3], m.e[2], m.e[1], m.e[0]};
    };
    DerivMonomial best = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (rank(m) > rank(best)) best = m;
    return best;
}

JetPolynomial total_derivative(const JetPolynomial& f) {
    if (f.order() >= 4) throw OrderOverflow();
    JetPolynomial r;
    Symbol x = Symbol::x(), y = Symbol::y();
    for (const auto& [m, c] : f.terms()) {
        r.add_term(m, c.derivative(x));
        r.add_term(m * DerivMonomial::of(1), c.derivative(y));
        for (int k = 1; k <= 3; ++k) {
            std::uint8_t e = m.e[k - 1];
            if (e == 0) continue;
            DerivMonomial shifted = m;
            shifted.e[k - 1] = static_cast<std::uint8_t>(e - 1);
            shifted.e[k] = static_cast<std::uint8_t>(shifted.e[k] + 1);
            r.add_term(shifted, c * RationalFunction(Rational(e)));
        }
    }
    return r;
}

JetPolynomial substitute_derivative(const JetPolynomial& f, int k, const JetPolynomial& replacement) {
    if (k < 1 || k > 4) throw std::invalid_argument("derivative index out of range");
    if (replacement.order() >= k)
        throw std::invalid_argument("replacement order must be below the substituted derivative");
    // cache powers of the replacement
    std::map<std::uint8_t, JetPolynomial> powers;
    JetPolynomial r;
    for (const auto& [m, c] : f.terms()) {
        std::uint8_t e = m.e[k - 1];
        if (e == 0) {
            r.add_term(m, c);
            continue;
        }
        DerivMonomial rest = m;
        rest.e[k - 1] = 0;
        auto it = powers.find(e);
        if (it == powers.end()) it = powers.emplace(e, replacement.pow(e)).first;
        r = r + it->second * JetPolynomial::term(c, rest);
    }
    return r;
}

JetPolynomial normalize_monic(const JetPolynomial& f) {
    if (f.is_zero()) throw ZeroLeadingCoefficient();
    RationalFunction lead = f.coefficient(f.leading_monomial());
    if (lead.is_zero()) throw ZeroLeadingCoefficient();
    if (lead.is_one()) return f;
    return f.scale(RationalFunction(Rational(1)) / lead);
}

std::optional<int> ShapeDescriptor::sector_degree(std::uint8_t e2, std::uint8_t e3, std::uint8_t e4) const {
    auto it = sectors.find({e2, e3, e4});
    if (it == sectors.end()) return std::nullopt;
    return static_cast<int>(it->second);
}

ShapeDescriptor shape(const JetPolynomial& f) {
    ShapeDescriptor d;
    d.order = f.order();
    for (const auto& [m, c] : f.terms()) {
        std::array<std::uint8_t, 3> key{m.e[1], m.e[2], m.e[3]};
        auto [it, inserted] = d.sectors.emplace(key, m.e[0]);
        if (!inserted) it->second = std::max(it->second, m.e[0]);
    }
    return d;
}

} // namespace odelin
