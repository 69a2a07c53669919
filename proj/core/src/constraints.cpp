#include "odelin/linearize.hpp"

namespace odelin {

namespace {

using RF = RationalFunction;

RF n(long v) { return RF(Rational(v)); }

} // namespace

// The formula lists below are transcribed verbatim from their published
// source, including its misprints. They serve as a secondary cross-check;
// regeneration through the generator is the authoritative verifier, and any
// disagreement between the two is reported as a diagnostic, never patched.
std::vector<ConstraintCheck> transcribed_constraints(const JetPolynomial& f, FormClass cls,
                                                     const RootCoefficients& root) {
    Symbol xs = Symbol::x(), ys = Symbol::y();
    auto dx = [&](const RF& v) { return v.derivative(xs); };
    auto dy = [&](const RF& v) { return v.derivative(ys); };
    const RF &c = root.c, &g = root.g, &h = root.h, &d = root.d;

    FormCoefficients fc = form_coefficients(f, cls);
    auto I = [&](const char* name) { return fc.get(name); };

    std::vector<std::pair<std::string, RF>> predicted;
    switch (cls) {
        case FormClass::Root8:
            return {};
        case FormClass::Third10: {
            RF A2 = I("A2"), A1 = I("A1"), A0 = I("A0");
            predicted = {
                {"B4", dy(A2) / n(3)},
                {"B3", dy(A1) / n(2) - dx(A1) / n(3)},
                {"B2", dy(A0) - dx(A1) / n(2)},
            };
            break;
        }
        case FormClass::Third14: {
            predicted = {
                {"alpha", n(3) * c * c},
                {"beta", n(5) * c * g + dy(c)},
                {"gamma", n(4) * c * h + n(2) * g * g + dy(g) - dx(c)},
                {"delta", n(3) * c * d + n(3) * g * h + dy(h) - dx(g)},
                {"epsilon", n(2) * d * g + h * h + dy(d) - dx(h)},
                {"phi", d * h - dx(d)},
            };
            break;
        }
        case FormClass::Fourth18: {
            RF A4 = I("A4"), A3 = I("A3"), A2 = I("A2"), A1 = I("A1"), A0 = I("A0");
            predicted = {
                {"B6", A4 / n(5)},
                {"B5", dy(A3) / n(4) - dx(A4) / n(5)},
                {"B4", dy(A2) / n(3) - dx(A3) / n(4)},
                {"B3", dy(A1) / n(2) - dx(A2) / n(3)},
                {"B2", dy(A0) - dx(A1) / n(2)},
                {"B1", d * dy(h) + h * dy(d) - dx(dy(d)) - dx(A0) / n(2)},
                {"B0", d * dx(h) + h * dx(d) - dx(dx(d))},
                {"A0", n(2) * g * d + h * h + dy(d) - dx(h)},
            };
            break;
        }
        case FormClass::Fourth21: {
            predicted = {
                {"P3", n(28) * c * d * g + n(13) * c * h * h + n(12) * g * g * h -
                           n(3) * (h + d) * dx(c) + n(4) * d * dy(c) - (n(2) * g + n(3) * h) * dx(g) +
                           (n(3) * h + n(2) * d) * dy(g) - (c + n(3) * g) * dx(h) +
                           n(2) * (g + h) * dy(h) - n(3) * c * dx(d) + (c + n(2) * g) * dy(d) +
                           dx(dx(g)) - n(2) * dx(dy(h)) + dy(dy(d))},
                {"P2", n(18) * c * h * d + n(8) * g * g * d + n(7) * g * h * h - n(6) * d * dx(c) -
                           n(5) * h * dx(g) + n(4) * d * dy(g) - n(4) * g * dx(h) + n(4) * h * dy(h) -
                           n(3) * c * dx(d) + n(2) * g * dy(d) + dx(dx(g)) - n(2) * dx(dy(h)) +
                           dy(dy(d))},
                {"P1", n(6) * c * d * d - n(8) * g * h * d + h * h * h - n(4) * d * dx(g) -
                           n(3) * h * dx(h) + n(3) * d * dy(h) - n(2) * g * dx(d) + n(2) * h * dy(d) +
                           dx(dx(h)) - n(2) * dx(dy(d))},
                {"P0", n(2) * g * d * d + h * h * d - n(2) * d * dx(h) - h * dx(d) + d * dy(d) +
                           dx(dx(d))},
            };
            break;
        }
        case FormClass::Fourth24: {
            RF A2 = I("A2"), A1 = I("A1"), A0 = I("A0"), C0 = I("C0");
            predicted = {
                {"C3", n(7) * dy(A2) / n(3)},
                {"C2", n(5) * dy(A1) / n(2) - n(2) * dx(A2)},
                {"C1", n(3) * dy(A0) - n(2) * dx(A1)},
                {"D5", dy(dy(A2)) / n(3)},
                {"D4", dy(dy(A1)) / n(2) - n(2) * dx(dy(A2)) / n(3)},
                {"D3", dy(dy(A0)) / n(2) - dx(dy(A1)) + dx(dx(A2)) / n(3)},
                {"C0", dy(d) - n(2) * dx(A0)},
                {"D0", dx(dx(d))},
                {"D1", -n(2) * dx(C0) - n(3) * dx(dx(A0))},
                {"D2", dy(C0) + dx(dx(A1)) / n(2)},
            };
            break;
        }
        case FormClass::Fourth30: {
            RF Q1 = I("Q1"), Q0 = I("Q0"), R0 = I("R0");
            predicted = {
                {"R4", Q1 * Q1 / n(4)},
                {"R3", Q1 * Q0 + n(7) * dy(Q1) / n(6)},
                {"R1", n(2) * Q0 * h + h * h + n(3) * dy(h) - n(2) * dx(Q0)},
                {"S6", Q1 * dy(Q1) / n(12)},
                {"S5", -Q1 * dx(Q1) / n(36) + Q0 * dy(Q1) / n(6) + Q1 * dy(Q0) / n(4) +
                           dy(dy(Q1)) / n(6)},
                {"S4", -Q0 * dx(Q1) / n(6) + h * dy(Q1) / n(6) - Q1 * dx(Q0) / n(4) +
                           Q0 * dy(Q0) / n(2) + Q1 * dy(h) / n(2) - dx(dy(Q1)) / n(3) +
                           dy(dy(Q0)) / n(2)},
                {"S3", Q1 * (R0 - h * h - dx(h)) / n(2) - h * Q1 / n(6) - Q0 * dx(Q0) / n(2) +
                           h * dy(Q0) / n(2) + Q0 * dy(h) + dx(dx(Q1)) / n(6) - dx(dy(Q0)) +
                           dy(dy(h))},
                {"S2", Q1 * dx(d) / n(2) + Q0 * (R0 - h * h + dx(h)) - h * dy(h) -
                           h * dx(Q0) / n(2) + dy(R0) + dx(dx(Q0)) / n(2)},
                {"S1", h * (R0 - h * h + n(5) * dx(h)) - n(2) * dx(R0) - Q0 * dx(d) -
                           n(3) * dx(dx(h))},
                {"S0", h * dx(d) - dx(dx(d))},
            };
            break;
        }
        case FormClass::Fourth34: {
            RF A2 = I("A2"), A1 = I("A1"), A0 = I("A0");
            predicted = {
                {"B7", n(6) * c * c * c},
                {"B6", n(7) * c * (A1 + dy(c))},
                {"B5", n(3) * A2 * A0 + n(5) * c * A1 * A1 / n(2) - n(6) * c * dx(c) +
                           n(7) * A1 * dy(c) / n(2) + n(5) * c * dy(A1) / n(2) + dy(dy(c))},
                {"B3", n(8) * c * A1 * d + n(6) * c * A0 * A0 + A1 * A1 * A0 - n(6) * A0 * dx(c) +
                           n(7) * d * dy(c) - A1 * dx(A1) + n(5) * A0 * dy(A1) / n(2) -
                           n(2) * c * dx(A0) + n(3) * A1 * dy(A0) / n(2) + c * dy(d) + dx(dx(c)) -
                           dx(dy(A1)) + dy(dy(A0))},
                {"B2", n(12) * c * A0 * d + A1 * A1 * d + A1 * A0 * A0 - n(6) * d * dx(c) -
                           n(2) * A0 * dx(A1) + n(5) * d * dy(A1) / n(2) - A1 * dx(A0) +
                           n(3) * A0 * dy(A0) + A1 * dy(d) / n(2) + dx(dx(A1)) / n(2) -
                           n(2) * dx(dy(A0)) + dy(dy(d))},
                {"B1", n(6) * c * d * d + n(2) * A1 * A0 * d - n(4) * d * dx(A1) -
                           n(2) * A0 * dx(A0) + n(3) * d * dy(A0) + A0 * dy(d) + dx(dx(A0)) -
                           n(2) * dx(dy(d))},
                {"B0", d * (A1 * d + dy(d) - dx(A0)) + dx(dx(d))},
            };
            break;
        }
    }

    std::vector<ConstraintCheck> out;
    for (const auto& [name, value] : predicted) {
        ConstraintCheck check;
        check.name = name;
        RF instance = fc.get(name);
        check.instance = instance.to_string();
        check.predicted = value.to_string();
        check.matches = instance == value;
        out.push_back(std::move(check));
    }
    return out;
}

} // namespace odelin
