#include "odelin/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace odelin {

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

Monomial Monomial::of(Symbol v, std::uint32_t k) {
    Monomial m;
    if (k == 0) return m;
    m.exps.assign(v.id + 1, 0);
    m.exps[v.id] = k;
    return m;
}

std::uint32_t Monomial::exp(Symbol v) const {
    return v.id < exps.size() ? exps[v.id] : 0;
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (auto e : exps) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<std::uint32_t> e(std::max(exps.size(), o.exps.size()), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) e[i] += exps[i];
    for (std::size_t i = 0; i < o.exps.size(); ++i) e[i] += o.exps[i];
    return Monomial{std::move(e)};
}

bool Monomial::divides(const Monomial& o) const {
    if (exps.size() > o.exps.size()) return false;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > o.exps[i]) return false;
    return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
    std::vector<std::uint32_t> e = exps;
    for (std::size_t i = 0; i < o.exps.size(); ++i) {
        if (i >= e.size() || e[i] < o.exps[i]) throw std::logic_error("monomial division not exact");
        e[i] -= o.exps[i];
    }
    return Monomial{std::move(e)};
}

Monomial Monomial::gcd(const Monomial& o) const {
    std::vector<std::uint32_t> e(std::min(exps.size(), o.exps.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(exps[i], o.exps[i]);
    return Monomial{std::move(e)};
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    std::size_t n = std::max(a.exps.size(), b.exps.size());
    for (std::size_t i = n; i-- > 0;) {
        std::uint32_t ea = i < a.exps.size() ? a.exps[i] : 0;
        std::uint32_t eb = i < b.exps.size() ? b.exps[i] : 0;
        if (ea != eb) return ea > eb;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Polynomial basics
// ---------------------------------------------------------------------------

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial::one(), c);
}

Polynomial Polynomial::variable(Symbol v, std::uint32_t k) {
    Polynomial p;
    p.terms_.emplace(Monomial::of(v, k), Rational(1));
    return p;
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("not a constant polynomial");
    return terms_.begin()->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scale(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(std::uint32_t n) const {
    Polynomial r(Rational(1));
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scale(c); }

std::uint32_t Polynomial::degree_in(Symbol v) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exp(v));
    return d;
}

Polynomial Polynomial::coefficient_of(Symbol v, std::uint32_t k) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.exp(v) != k) continue;
        std::vector<std::uint32_t> e = m.exps;
        if (v.id < e.size()) e[v.id] = 0;
        r.add_term(Monomial{std::move(e)}, c);
    }
    return r;
}

std::vector<Symbol> Polynomial::support() const {
    std::vector<Symbol> out;
    std::size_t width = 0;
    for (const auto& [m, c] : terms_) width = std::max(width, m.exps.size());
    for (std::size_t i = 0; i < width; ++i) {
        Symbol v{static_cast<std::uint32_t>(i)};
        if (depends_on(v)) out.push_back(v);
    }
    return out;
}

Polynomial Polynomial::derivative(Symbol v) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exp(v);
        if (e == 0) continue;
        std::vector<std::uint32_t> ex = m.exps;
        ex[v.id] = e - 1;
        r.add_term(Monomial{std::move(ex)}, c * e);
    }
    return r;
}

Polynomial Polynomial::antiderivative(Symbol v) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exp(v);
        std::vector<std::uint32_t> ex = m.exps;
        if (ex.size() <= v.id) ex.resize(v.id + 1, 0);
        ex[v.id] = e + 1;
        r.add_term(Monomial{std::move(ex)}, c / (e + 1));
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (i >= point.size()) throw std::invalid_argument("evaluation point missing a symbol");
            Rational base = point[i];
            for (std::uint32_t k = 0; k < m.exps[i]; ++k) t *= base;
        }
        total += t;
    }
    return total;
}

Polynomial Polynomial::substitute(Symbol v, const Rational& value) const {
    Polynomial out;
    for (std::uint32_t k = 0; k <= degree_in(v); ++k) {
        Rational scale(1);
        for (std::uint32_t i = 0; i < k; ++i) scale *= value;
        out += coefficient_of(v, k).scale(scale);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string vars;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += Symbol{static_cast<std::uint32_t>(i)}.name();
            if (m.exps[i] > 1) vars += "^" + std::to_string(m.exps[i]);
        }
        if (vars.empty()) {
            os << rational_to_string(mag);
        } else if (mag == 1) {
            os << vars;
        } else {
            os << rational_to_string(mag) << "*" << vars;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Division, content, gcd
// ---------------------------------------------------------------------------

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) return std::nullopt;
    if (q.is_constant()) return p.scale(1 / q.constant_value());
    Polynomial rem = p;
    Polynomial quo;
    const Monomial& qm = q.leading_monomial();
    const Rational& qc = q.leading_coefficient();
    while (!rem.is_zero()) {
        const Monomial& rm = rem.leading_monomial();
        if (!qm.divides(rm)) return std::nullopt;
        Monomial m = rm.divide_by(qm);
        Rational c = rem.leading_coefficient() / qc;
        Polynomial t = Polynomial::term(c, m);
        quo += t;
        rem -= t * q;
    }
    return quo;
}

PseudoDivision pseudo_divide(const Polynomial& A, const Polynomial& B, Symbol v) {
    if (B.is_zero()) throw std::invalid_argument("pseudo-division by zero");
    std::uint32_t db = B.degree_in(v);
    Polynomial lcB = B.coefficient_of(v, db);
    Polynomial R = A;
    Polynomial Q;
    std::uint32_t dr = R.degree_in(v);
    if (dr < db || A.is_zero()) {
        // multiply through once so the identity lc^(da-db+1) A = QB + R holds trivially
        return PseudoDivision{Polynomial(), A};
    }
    std::int64_t steps = static_cast<std::int64_t>(dr) - db + 1;
    while (!R.is_zero() && R.degree_in(v) >= db) {
        std::uint32_t d = R.degree_in(v);
        Polynomial lcR = R.coefficient_of(v, d);
        Polynomial shift = lcR * Polynomial::variable(v, d - db);
        Q = Q * lcB + shift;
        R = R * lcB - shift * B;
        --steps;
        if (R.is_zero()) break;
    }
    // pad remaining multiplier so the pseudo-division identity uses exactly
    // lc^(da-db+1)
    while (steps-- > 0) {
        Q = Q * lcB;
        R = R * lcB;
    }
    return PseudoDivision{Q, R};
}

PrimitiveSplit primitive_split(const Polynomial& p) {
    if (p.is_zero()) return {Rational(0), Polynomial()};
    // content = gcd of numerators / lcm of denominators, sign of leading coeff
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (p.leading_coefficient() < 0) content = -content;
    return {content, p.scale(1 / content)};
}

namespace {

// gcd of coefficient polynomials of p viewed univariately in v
Polynomial content_in(const Polynomial& p, Symbol v) {
    Polynomial c;
    for (std::uint32_t k = 0; k <= p.degree_in(v); ++k) {
        Polynomial coeff = p.coefficient_of(v, k);
        if (coeff.is_zero()) continue;
        c = gcd(c, coeff);
        if (c.is_one()) break;
    }
    return c;
}

Polynomial exact_divide_checked(const Polynomial& p, const Polynomial& q) {
    auto r = exact_divide(p, q);
    if (!r) throw std::logic_error("internal: division expected exact");
    return *r;
}

// subresultant polynomial remainder sequence in the main variable v;
// inputs primitive w.r.t. v, deg(A) >= deg(B) >= 1
Polynomial subresultant_gcd(Polynomial A, Polynomial B, Symbol v) {
    Polynomial g(Rational(1)), h(Rational(1));
    while (true) {
        std::uint32_t da = A.degree_in(v), db = B.degree_in(v);
        std::uint32_t delta = da - db;
        Polynomial R = pseudo_divide(A, B, v).remainder;
        if (R.is_zero()) break;
        if (R.degree_in(v) == 0) {
            // last nonzero pseudo-remainder is v-free: gcd is v-free
            return Polynomial(Rational(1));
        }
        A = B;
        Polynomial divisor = g * h.pow(delta);
        B = exact_divide_checked(R, divisor);
        g = A.coefficient_of(v, A.degree_in(v));
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact_divide_checked(g.pow(delta), h.pow(delta - 1));
        }
    }
    return primitive_split(exact_divide_checked(B, content_in(B, v))).primitive;
}

} // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero()) return q.is_zero() ? Polynomial() : primitive_split(q).primitive;
    if (q.is_zero()) return primitive_split(p).primitive;
    if (p.is_constant() || q.is_constant()) return Polynomial(Rational(1));

    // fast path: both single-term
    if (p.term_count() == 1 && q.term_count() == 1) {
        return Polynomial::term(Rational(1), p.leading_monomial().gcd(q.leading_monomial()));
    }
    // fast path: factor out the common monomial
    Monomial mp = p.leading_monomial();
    for (const auto& [m, c] : p.terms()) mp = mp.gcd(m);
    Monomial mq = q.leading_monomial();
    for (const auto& [m, c] : q.terms()) mq = mq.gcd(m);
    Monomial shared = mp.gcd(mq);
    if (!mp.is_one() || !mq.is_one()) {
        Polynomial pp = exact_divide_checked(p, Polynomial::term(Rational(1), mp));
        Polynomial qq = exact_divide_checked(q, Polynomial::term(Rational(1), mq));
        Polynomial inner = gcd(pp, qq);
        return inner * Polynomial::term(Rational(1), shared);
    }

    // main variable: first symbol (in the fixed order) occurring in either
    Symbol v{0};
    bool found = false;
    std::uint32_t width = 0;
    for (const auto& [m, c] : p.terms()) width = std::max<std::uint32_t>(width, m.exps.size());
    for (const auto& [m, c] : q.terms()) width = std::max<std::uint32_t>(width, m.exps.size());
    for (std::uint32_t i = 0; i < width && !found; ++i) {
        Symbol s{i};
        if (p.depends_on(s) || q.depends_on(s)) {
            v = s;
            found = true;
        }
    }
    if (!found) return Polynomial(Rational(1));

    Polynomial cp = content_in(p, v), cq = content_in(q, v);
    Polynomial pp = exact_divide_checked(p, cp), qq = exact_divide_checked(q, cq);
    Polynomial cont = gcd(cp, cq);

    Polynomial result;
    if (!pp.depends_on(v) || !qq.depends_on(v)) {
        // one side is v-free after content removal, hence a unit w.r.t. v
        result = cont;
    } else {
        if (pp.degree_in(v) < qq.degree_in(v)) std::swap(pp, qq);
        result = cont * subresultant_gcd(pp, qq, v);
    }
    return primitive_split(result).primitive;
}

// ---------------------------------------------------------------------------
// Squarefree decomposition and roots
// ---------------------------------------------------------------------------

namespace {

// Yun's algorithm on a polynomial primitive w.r.t. v (every factor involves v)
std::vector<std::pair<Polynomial, std::uint32_t>> yun(const Polynomial& p, Symbol v) {
    std::vector<std::pair<Polynomial, std::uint32_t>> out;
    Polynomial dp = p.derivative(v);
    Polynomial g = gcd(p, dp);
    Polynomial c = exact_divide_checked(p, g);
    Polynomial d = exact_divide_checked(dp, g) - c.derivative(v);
    std::uint32_t i = 1;
    while (!(c.is_constant())) {
        Polynomial f = gcd(c, d);
        if (!f.is_constant()) out.emplace_back(primitive_split(f).primitive, i);
        c = exact_divide_checked(c, f);
        d = exact_divide_checked(d, f) - c.derivative(v);
        ++i;
    }
    return out;
}

} // namespace

SquareFreeDecomposition squarefree_decomposition(const Polynomial& p) {
    SquareFreeDecomposition out;
    if (p.is_zero()) {
        out.content = Rational(0);
        return out;
    }
    Polynomial prim = primitive_split(p).primitive;
    std::vector<std::pair<Polynomial, std::uint32_t>> merged;
    if (!prim.is_constant()) {
        // split off the content w.r.t. the first variable and recurse; content
        // and primitive part are coprime, so factors of equal multiplicity fuse
        Symbol v = prim.support().front();
        Polynomial cont = content_in(prim, v);
        Polynomial pp = exact_divide_checked(prim, cont);
        if (!cont.is_constant()) merged = squarefree_decomposition(cont).factors;
        for (auto& [f, m] : yun(pp, v)) {
            bool fused = false;
            for (auto& [g, mg] : merged) {
                if (mg == m) {
                    g = g * f;
                    fused = true;
                    break;
                }
            }
            if (!fused) merged.emplace_back(f, m);
        }
    }
    out.factors = std::move(merged);
    Polynomial rebuilt(Rational(1));
    for (const auto& [f, m] : out.factors) rebuilt = rebuilt * f.pow(m);
    Polynomial ratio = exact_divide_checked(p, rebuilt);
    if (!ratio.is_constant()) throw std::logic_error("squarefree decomposition inconsistent");
    out.content = ratio.constant_value();
    return out;
}

std::optional<Rational> nth_root(const Rational& a, std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("0th root");
    if (n == 1) return a;
    if (a == 0) return Rational(0);
    bool negative = a < 0;
    if (negative && n % 2 == 0) return std::nullopt;
    mpz_class num = abs(a.get_num()), den = a.get_den();
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return std::nullopt;
    Rational r(rn, rd);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::optional<Polynomial> nth_root(const Polynomial& p, std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("0th root");
    if (p.is_zero()) return Polynomial();
    if (n == 1) return p;
    if (p.is_constant()) {
        auto c = nth_root(p.constant_value(), n);
        if (!c) return std::nullopt;
        return Polynomial(*c);
    }
    auto dec = squarefree_decomposition(p);
    Rational mag = abs(dec.content);
    bool negative = dec.content < 0;
    if (negative && n % 2 == 0) return std::nullopt;
    auto croot = nth_root(mag, n);
    if (!croot) return std::nullopt;
    Polynomial root(negative ? Rational(-*croot) : *croot);
    for (const auto& [f, m] : dec.factors) {
        if (m % n != 0) return std::nullopt;
        root = root * f.pow(m / n);
    }
    if (n % 2 == 0 && root.leading_coefficient() < 0) root = -root;
    return root;
}

} // namespace odelin
