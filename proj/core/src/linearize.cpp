#include "odelin/linearize.hpp"

#include "odelin/parse.hpp"

#include <algorithm>
#include <sstream>

namespace odelin {

std::string RootCoefficients::to_string() const {
    return "c=" + c.to_string() + ", g=" + g.to_string() + ", h=" + h.to_string() +
           ", d=" + d.to_string();
}

std::string class_name(FormClass c) {
    switch (c) {
        case FormClass::Root8: return "root8";
        case FormClass::Third10: return "third10";
        case FormClass::Third14: return "third14";
        case FormClass::Fourth18: return "fourth18";
        case FormClass::Fourth21: return "fourth21";
        case FormClass::Fourth24: return "fourth24";
        case FormClass::Fourth30: return "fourth30";
        case FormClass::Fourth34: return "fourth34";
    }
    return "?";
}

std::optional<FormClass> class_from_name(const std::string& name) {
    for (FormClass c : kAllClasses)
        if (class_name(c) == name) return c;
    return std::nullopt;
}

int class_order(FormClass c) {
    switch (c) {
        case FormClass::Root8: return 2;
        case FormClass::Third10:
        case FormClass::Third14: return 3;
        default: return 4;
    }
}

bool class_is_total_derivative(FormClass c) {
    return c == FormClass::Third10 || c == FormClass::Fourth18 || c == FormClass::Fourth24;
}

JetPolynomial root_equation(const RootCoefficients& r) {
    JetPolynomial f = JetPolynomial::derivative_symbol(2);
    f.add_term(DerivMonomial{{3, 0, 0, 0}}, r.c);
    f.add_term(DerivMonomial{{2, 0, 0, 0}}, -r.g);
    f.add_term(DerivMonomial{{1, 0, 0, 0}}, r.h);
    f.add_term(DerivMonomial{{0, 0, 0, 0}}, -r.d);
    return f;
}

namespace {

// u2 expressed from the root equation: u2 = -c u1^3 + g u1^2 - h u1 + d
JetPolynomial root_rhs(const RootCoefficients& r) {
    JetPolynomial f;
    f.add_term(DerivMonomial{{3, 0, 0, 0}}, -r.c);
    f.add_term(DerivMonomial{{2, 0, 0, 0}}, r.g);
    f.add_term(DerivMonomial{{1, 0, 0, 0}}, -r.h);
    f.add_term(DerivMonomial{{0, 0, 0, 0}}, r.d);
    return f;
}

// u3 expressed from the differentiated root equation
JetPolynomial third_order_rhs(const RootCoefficients& r) {
    JetPolynomial third = total_derivative(root_equation(r));
    return JetPolynomial::derivative_symbol(3) - third;
}

} // namespace

JetPolynomial generate(const RootCoefficients& root, FormClass cls) {
    switch (cls) {
        case FormClass::Root8:
            return root_equation(root);
        case FormClass::Third10:
            return total_derivative(root_equation(root));
        case FormClass::Third14:
            return substitute_derivative(total_derivative(root_equation(root)), 2, root_rhs(root));
        case FormClass::Fourth18:
            return total_derivative(generate(root, FormClass::Third14));
        case FormClass::Fourth21:
            return substitute_derivative(generate(root, FormClass::Fourth18), 2, root_rhs(root));
        case FormClass::Fourth24:
            return total_derivative(generate(root, FormClass::Third10));
        case FormClass::Fourth30:
            return substitute_derivative(generate(root, FormClass::Fourth24), 3, third_order_rhs(root));
        case FormClass::Fourth34:
            return substitute_derivative(generate(root, FormClass::Fourth24), 2, root_rhs(root));
    }
    throw std::logic_error("unknown class");
}

std::pair<RationalFunction, RationalFunction> tresse_criteria(const RootCoefficients& r) {
    Symbol x = Symbol::x(), y = Symbol::y();
    const RationalFunction &c = r.c, &g = r.g, &h = r.h, &d = r.d;
    RationalFunction three(Rational(3)), two(Rational(2));
    RationalFunction first = three * (c * h).derivative(x) + three * d * c.derivative(y) -
                             two * g * g.derivative(x) - g * h.derivative(y) -
                             three * c.derivative(x).derivative(x) -
                             two * g.derivative(x).derivative(y) - h.derivative(y).derivative(y);
    RationalFunction second = three * (d * g).derivative(y) + three * c * d.derivative(x) -
                              two * h * h.derivative(y) - h * g.derivative(x) -
                              three * d.derivative(y).derivative(y) -
                              two * h.derivative(x).derivative(y) - g.derivative(x).derivative(x);
    return {first, second};
}

RationalFunction FormCoefficients::get(const std::string& name) const {
    for (const auto& [n, v] : named)
        if (n == name) return v;
    throw std::invalid_argument("no coefficient named " + name);
}

FormCoefficients lie_form(const RootCoefficients& root) {
    FormCoefficients fc;
    fc.cls = FormClass::Root8;
    fc.named.emplace_back("E3", root.c);
    fc.named.emplace_back("E2", -root.g);
    fc.named.emplace_back("E1", root.h);
    fc.named.emplace_back("E0", -root.d);
    return fc;
}

namespace {

struct SlotSpec {
    const char* name;
    DerivMonomial mono;
    int sign; // value = sign * coefficient(mono)
};

std::vector<SlotSpec> slot_table(FormClass cls) {
    auto M = [](std::uint8_t a, std::uint8_t b = 0, std::uint8_t c = 0, std::uint8_t d = 0) {
        return DerivMonomial{{a, b, c, d}};
    };
    switch (cls) {
        case FormClass::Root8:
            return {{"E3", M(3), 1}, {"E2", M(2), 1}, {"E1", M(1), 1}, {"E0", M(0), 1}};
        case FormClass::Third10:
            return {{"A2", M(2, 1), 1}, {"A1", M(1, 1), -1}, {"A0", M(0, 1), 1},
                    {"B4", M(4), 1},    {"B3", M(3), -1},    {"B2", M(2), 1},
                    {"B1", M(1), -1},   {"B0", M(0), 1}};
        case FormClass::Third14:
            return {{"alpha", M(5), -1}, {"beta", M(4), 1},    {"gamma", M(3), -1},
                    {"delta", M(2), 1},  {"epsilon", M(1), -1}, {"phi", M(0), 1}};
        case FormClass::Fourth18:
            return {{"A4", M(4, 1), -1}, {"A3", M(3, 1), 1}, {"A2", M(2, 1), -1},
                    {"A1", M(1, 1), 1},  {"A0", M(0, 1), -1},
                    {"B6", M(6), -1},    {"B5", M(5), 1},    {"B4", M(4), -1},
                    {"B3", M(3), 1},     {"B2", M(2), -1},   {"B1", M(1), 1},
                    {"B0", M(0), -1}};
        case FormClass::Fourth21:
            return {{"P7", M(7), 1}, {"P6", M(6), -1}, {"P5", M(5), 1}, {"P4", M(4), -1},
                    {"P3", M(3), 1}, {"P2", M(2), -1}, {"P1", M(1), 1}, {"P0", M(0), -1}};
        case FormClass::Fourth24:
            return {{"A2", M(2, 0, 1), 1}, {"A1", M(1, 0, 1), -1}, {"A0", M(0, 0, 1), 1},
                    {"B1", M(1, 2), 1},    {"B0", M(0, 2), -1},
                    {"C3", M(3, 1), 1},    {"C2", M(2, 1), -1},    {"C1", M(1, 1), 1},
                    {"C0", M(0, 1), -1},
                    {"D5", M(5), -1},      {"D4", M(4), 1},        {"D3", M(3), -1},
                    {"D2", M(2), 1},       {"D1", M(1), -1},       {"D0", M(0), 1}};
        case FormClass::Fourth30:
            return {{"Q1", M(1, 2), 1},    {"Q0", M(0, 2), -1},
                    {"R4", M(4, 1), -1},   {"R3", M(3, 1), 1},  {"R2", M(2, 1), -1},
                    {"R1", M(1, 1), 1},    {"R0", M(0, 1), -1},
                    {"S6", M(6), -1},      {"S5", M(5), 1},     {"S4", M(4), -1},
                    {"S3", M(3), 1},       {"S2", M(2), -1},    {"S1", M(1), 1},
                    {"S0", M(0), -1}};
        case FormClass::Fourth34:
            return {{"A2", M(2, 0, 1), 1}, {"A1", M(1, 0, 1), -1}, {"A0", M(0, 0, 1), 1},
                    {"B7", M(7), 1},       {"B6", M(6), -1},       {"B5", M(5), 1},
                    {"B4", M(4), -1},      {"B3", M(3), 1},        {"B2", M(2), -1},
                    {"B1", M(1), 1},       {"B0", M(0), -1}};
    }
    return {};
}

std::string deriv_monomial_name(const DerivMonomial& m) {
    static const char* names[4] = {"y'", "y''", "y'''", "y''''"};
    if (m.is_one()) return "constant";
    std::string out;
    for (int k = 4; k >= 1; --k) {
        if (m.e[k - 1] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[k - 1];
        if (m.e[k - 1] > 1) out += "^" + std::to_string(static_cast<int>(m.e[k - 1]));
    }
    return out;
}

} // namespace

FormCoefficients form_coefficients(const JetPolynomial& f, FormClass cls) {
    FormCoefficients fc;
    fc.cls = cls;
    for (const SlotSpec& s : slot_table(cls)) {
        RationalFunction v = f.coefficient(s.mono);
        fc.named.emplace_back(s.name, s.sign < 0 ? -v : v);
    }
    return fc;
}

bool shape_compatible(const JetPolynomial& f, FormClass cls) {
    if (f.is_zero()) return false;
    if (f.order() != class_order(cls)) return false;
    // monic leading derivative
    DerivMonomial lead;
    lead.e[class_order(cls) - 1] = 1;
    if (!f.coefficient(lead).is_one()) return false;

    using Key = std::array<std::uint8_t, 3>;
    std::map<Key, std::uint8_t> allowed; // (e2,e3,e4) -> max u1 degree
    switch (cls) {
        case FormClass::Root8:
            allowed = {{{1, 0, 0}, 0}, {{0, 0, 0}, 3}};
            break;
        case FormClass::Third10:
            allowed = {{{0, 1, 0}, 0}, {{1, 0, 0}, 2}, {{0, 0, 0}, 4}};
            break;
        case FormClass::Third14:
            allowed = {{{0, 1, 0}, 0}, {{0, 0, 0}, 5}};
            break;
        case FormClass::Fourth18:
            allowed = {{{0, 0, 1}, 0}, {{1, 0, 0}, 4}, {{0, 0, 0}, 6}};
            break;
        case FormClass::Fourth21:
            allowed = {{{0, 0, 1}, 0}, {{0, 0, 0}, 7}};
            break;
        case FormClass::Fourth24:
            allowed = {{{0, 0, 1}, 0}, {{0, 1, 0}, 2}, {{2, 0, 0}, 1}, {{1, 0, 0}, 3}, {{0, 0, 0}, 5}};
            break;
        case FormClass::Fourth30:
            allowed = {{{0, 0, 1}, 0}, {{2, 0, 0}, 1}, {{1, 0, 0}, 4}, {{0, 0, 0}, 6}};
            break;
        case FormClass::Fourth34:
            allowed = {{{0, 0, 1}, 0}, {{0, 1, 0}, 2}, {{0, 0, 0}, 7}};
            break;
    }
    for (const auto& [sector, deg] : shape(f).sectors) {
        auto it = allowed.find(sector);
        if (it == allowed.end() || deg > it->second) return false;
    }
    return true;
}

VerifyReport verify(const JetPolynomial& f, FormClass cls, const RootCoefficients& root) {
    VerifyReport rep;
    JetPolynomial regen = generate(root, cls);
    JetPolynomial diff = f - regen;
    rep.regenerated = diff.is_zero();
    if (!rep.regenerated) {
        // name the offending coefficient slots, catalog names where available
        auto table = slot_table(cls);
        for (const auto& [m, c] : diff.terms()) {
            std::string label = deriv_monomial_name(m);
            for (const SlotSpec& s : table)
                if (s.mono == m) {
                    label = std::string(s.name) + " (" + label + ")";
                    break;
                }
            rep.residuals.push_back(label + " coefficient");
        }
    }
    rep.criteria = tresse_criteria(root);
    rep.criteria_zero = rep.criteria.first.is_zero() && rep.criteria.second.is_zero();
    rep.ok = rep.regenerated && rep.criteria_zero;
    return rep;
}

std::variant<JetPolynomial, NotExact> is_total_derivative(const JetPolynomial& f) {
    if (f.order() < 1) throw std::invalid_argument("exactness test needs order >= 1");
    JetPolynomial G;
    JetPolynomial cur = f;
    for (int m = f.order(); m >= 2; --m) {
        if (cur.order() < m) continue;
        JetPolynomial head; // coefficient of u_m, a jet of order < m
        for (const auto& [mono, c] : cur.terms()) {
            if (mono.e[m - 1] == 0) continue;
            if (mono.e[m - 1] >= 2)
                return NotExact{"nonlinear in " + deriv_monomial_name(DerivMonomial::of(m))};
            DerivMonomial rest = mono;
            rest.e[m - 1] = 0;
            head.add_term(rest, c);
        }
        // integrate the head with respect to u_{m-1}
        JetPolynomial piece;
        for (const auto& [mono, c] : head.terms()) {
            DerivMonomial up = mono;
            up.e[m - 2] = static_cast<std::uint8_t>(up.e[m - 2] + 1);
            piece.add_term(up, c / RationalFunction(Rational(up.e[m - 2])));
        }
        G = G + piece;
        cur = cur - total_derivative(piece);
        if (cur.order() >= m) return NotExact{"reduction failed below order " + std::to_string(m)};
    }
    // remainder must be rho0(x,y) + rho1(x,y) u1 with rho0_y == rho1_x
    for (const auto& [mono, c] : cur.terms()) {
        if (mono.e[0] >= 2 || mono.order() > 1)
            return NotExact{"remainder nonlinear in y'"};
    }
    RationalFunction rho0 = cur.coefficient(0, 0, 0, 0);
    RationalFunction rho1 = cur.coefficient(1, 0, 0, 0);
    Symbol x = Symbol::x(), y = Symbol::y();
    if (!(rho0.derivative(y) == rho1.derivative(x)))
        return NotExact{"remainder fails the cross-derivative compatibility check"};
    auto w = antiderivative(rho0, x);
    if (!w) return NotExact{"remainder integral has a logarithmic part"};
    RationalFunction psi_prime = rho1 - w->derivative(y);
    if (psi_prime.depends_on(x)) return NotExact{"remainder fails the cross-derivative compatibility check"};
    auto psi = antiderivative(psi_prime, y);
    if (!psi) return NotExact{"remainder integral has a logarithmic part"};
    G = G + JetPolynomial(*w + *psi);
    return G;
}

std::string to_string(ExtractionStatus s) {
    switch (s) {
        case ExtractionStatus::Ok: return "ok";
        case ExtractionStatus::ShapeMismatch: return "shape-mismatch";
        case ExtractionStatus::NotAPerfectPower: return "not-a-perfect-power";
        case ExtractionStatus::LogTermRequired: return "log-term-required";
        case ExtractionStatus::InconsistentCoefficients: return "inconsistent-coefficients";
        case ExtractionStatus::UnderdeterminedD: return "underdetermined-d";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Linearizable: return "linearizable";
        case Verdict::NotThisClass: return "not-this-class";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

bool ClassificationReport::any_linearizable() const {
    return std::any_of(candidates.begin(), candidates.end(),
                       [](const CandidateReport& c) { return c.verdict == Verdict::Linearizable; });
}

} // namespace odelin
