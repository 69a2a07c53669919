#include "odelin/rational_function.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace odelin {

namespace {

// Univariate polynomial in one distinguished symbol with rational-function
// coefficients in the remaining symbols. Used only by the integrator.
struct UniPoly {
    std::vector<RationalFunction> c; // c[i] multiplies v^i

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const RationalFunction& lead() const { return c.back(); }

    RationalFunction coeff(std::size_t i) const {
        return i < c.size() ? c[i] : RationalFunction();
    }
};

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, RationalFunction());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

UniPoly scale(const UniPoly& a, const RationalFunction& s) {
    UniPoly r = a;
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
}

UniPoly upow(const UniPoly& a, std::uint32_t n) {
    UniPoly r;
    r.c = {RationalFunction(Rational(1))};
    UniPoly base = a;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

// division in k(rest)[v]; requires b nonzero
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("univariate division by zero");
    UniPoly q, r = a;
    q.c.assign(a.c.size(), RationalFunction());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        std::size_t shift = static_cast<std::size_t>(r.deg() - b.deg());
        RationalFunction factor = r.lead() / b.lead();
        q.c[shift] += factor;
        UniPoly sub;
        sub.c.assign(shift + b.c.size(), RationalFunction());
        for (std::size_t i = 0; i < b.c.size(); ++i) sub.c[shift + i] = b.c[i] * factor;
        sub.trim();
        r = r - sub;
    }
    q.trim();
    return {q, r};
}

UniPoly derivative(const UniPoly& a) {
    UniPoly r;
    if (a.c.size() <= 1) return r;
    r.c.assign(a.c.size() - 1, RationalFunction());
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = a.c[i] * RationalFunction(Rational(static_cast<long>(i)));
    r.trim();
    return r;
}

UniPoly monic(const UniPoly& a) {
    if (a.is_zero()) return a;
    return scale(a, RationalFunction(Rational(1)) / a.lead());
}

UniPoly ugcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return monic(a);
}

// s*a + t*b = g (monic gcd)
struct ExtGcd {
    UniPoly g, s, t;
};
ExtGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0, s1, t0, t1;
    s0.c = {RationalFunction(Rational(1))};
    t1.c = {RationalFunction(Rational(1))};
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly s2 = s0 - q * s1;
        UniPoly t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    RationalFunction inv = RationalFunction(Rational(1)) / r0.lead();
    return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

UniPoly from_polynomial(const Polynomial& p, Symbol v) {
    UniPoly r;
    r.c.assign(p.degree_in(v) + 1, RationalFunction());
    for (std::uint32_t k = 0; k <= p.degree_in(v); ++k) r.c[k] = RationalFunction(p.coefficient_of(v, k));
    r.trim();
    return r;
}

RationalFunction to_rf(const UniPoly& a, Symbol v) {
    RationalFunction r;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        r += a.c[i] * RationalFunction(Polynomial::variable(v, static_cast<std::uint32_t>(i)));
    }
    return r;
}

// monic squarefree decomposition over the coefficient field (Yun)
std::vector<std::pair<UniPoly, std::uint32_t>> u_squarefree(const UniPoly& p) {
    std::vector<std::pair<UniPoly, std::uint32_t>> out;
    UniPoly a = monic(p);
    if (a.deg() <= 0) return out;
    UniPoly da = derivative(a);
    UniPoly g = ugcd(a, da);
    UniPoly cpart = divmod(a, g).first;
    UniPoly d = divmod(da, g).first - derivative(cpart);
    std::uint32_t i = 1;
    while (cpart.deg() > 0) {
        UniPoly f = ugcd(cpart, d);
        if (f.deg() > 0) out.emplace_back(f, i);
        cpart = divmod(cpart, f).first;
        d = divmod(d, f).first - derivative(cpart);
        ++i;
    }
    return out;
}

struct Piece {
    UniPoly numer;
    UniPoly base;
    std::uint32_t power;
};

// A / prod(base_i^power_i) = sum numer_i / base_i^power_i, deg A < deg prod
std::vector<Piece> partial_fractions(const UniPoly& A, const std::vector<std::pair<UniPoly, std::uint32_t>>& factors) {
    std::vector<Piece> out;
    UniPoly current = A;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        UniPoly U = upow(factors[i].first, factors[i].second);
        if (i + 1 == factors.size()) {
            out.push_back({divmod(current, U).second, factors[i].first, factors[i].second});
            break;
        }
        UniPoly V;
        V.c = {RationalFunction(Rational(1))};
        for (std::size_t j = i + 1; j < factors.size(); ++j) V = V * upow(factors[j].first, factors[j].second);
        auto eg = extended_gcd(U, V);
        // s*U + t*V = 1
        UniPoly aU = divmod(current * eg.t, U).second;
        UniPoly aV = divmod(current * eg.s, V).second;
        out.push_back({aU, factors[i].first, factors[i].second});
        current = aV;
    }
    return out;
}

} // namespace

std::optional<RationalFunction> antiderivative(const RationalFunction& f, Symbol v) {
    if (f.is_zero()) return RationalFunction();
    UniPoly N = from_polynomial(f.numerator(), v);
    UniPoly D = from_polynomial(f.denominator(), v);

    auto [Q, R] = divmod(N, D);
    RationalFunction result;
    // polynomial part integrates term-wise
    for (std::size_t i = 0; i < Q.c.size(); ++i) {
        if (Q.c[i].is_zero()) continue;
        result += Q.c[i] * RationalFunction(Polynomial::variable(v, static_cast<std::uint32_t>(i + 1))) /
                  RationalFunction(Rational(static_cast<long>(i + 1)));
    }
    if (R.is_zero()) return result;

    // proper part: Hermite reduction over the squarefree decomposition
    RationalFunction lead = D.lead();
    UniPoly Dm = monic(D);
    UniPoly Rn = scale(R, RationalFunction(Rational(1)) / lead);
    auto factors = u_squarefree(Dm);
    if (factors.empty()) throw std::logic_error("inconsistent proper fraction");
    for (const Piece& piece : partial_fractions(Rn, factors)) {
        const UniPoly& Di = piece.base;
        UniPoly dDi = derivative(Di);
        auto eg = extended_gcd(Di, dDi); // gcd is 1: Di squarefree
        UniPoly T = piece.numer;
        for (std::uint32_t j = piece.power; j >= 2; --j) {
            // T/Di^j = C*Di'/Di^j + B/Di^(j-1), with C = T*t mod Di
            UniPoly C = divmod(T * eg.t, Di).second;
            UniPoly B = divmod(T - C * dDi, Di).first;
            Rational jm1(static_cast<long>(j) - 1);
            // integral of C*Di'/Di^j = -C/((j-1) Di^(j-1)) + integral of C'/((j-1) Di^(j-1))
            result -= to_rf(C, v) / (RationalFunction(jm1) * to_rf(upow(Di, j - 1), v));
            T = B + scale(derivative(C), RationalFunction(Rational(1)) / RationalFunction(jm1));
        }
        T.trim();
        if (!T.is_zero()) return std::nullopt; // logarithmic part remains
    }
    return result;
}

} // namespace odelin
