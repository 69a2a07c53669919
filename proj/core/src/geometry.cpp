#include "odelin/geometry.hpp"

#include "solve_util.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace odelin {

namespace {

using RF = RationalFunction;

RF n(long v) { return RF(Rational(v)); }

} // namespace

ChristoffelSet complete(const RootCoefficients& root, const GaugeChoice& gauge) {
    ChristoffelSet cs;
    cs.b = gauge.b;
    cs.e = gauge.e;
    cs.c = root.c;
    cs.d = root.d;
    cs.f = root.g + n(2) * gauge.b;
    cs.a = root.h + n(2) * gauge.e;
    return cs;
}

CurvatureComponents curvature(const ChristoffelSet& cs) {
    Symbol xs = Symbol::x(), ys = Symbol::y();
    // gamma[i][j][k]: upper index i, symmetric lower pair (j,k); 0 = x, 1 = y
    RF gamma[2][2][2];
    gamma[0][0][0] = -cs.a;
    gamma[0][0][1] = gamma[0][1][0] = -cs.b;
    gamma[0][1][1] = -cs.c;
    gamma[1][0][0] = -cs.d;
    gamma[1][0][1] = gamma[1][1][0] = -cs.e;
    gamma[1][1][1] = -cs.f;

    auto component = [&](int i, int j) {
        // R^i_{j12} = d_1 Gamma^i_{j2} - d_2 Gamma^i_{j1}
        //             + Gamma^i_{m1} Gamma^m_{j2} - Gamma^i_{m2} Gamma^m_{j1}
        RF r = gamma[i][j][1].derivative(xs) - gamma[i][j][0].derivative(ys);
        for (int m = 0; m < 2; ++m)
            r += gamma[i][m][0] * gamma[m][j][1] - gamma[i][m][1] * gamma[m][j][0];
        return r;
    };

    CurvatureComponents out;
    out.r1_112 = component(0, 0);
    out.r1_212 = component(0, 1);
    out.r2_112 = component(1, 0);
    out.r2_212 = component(1, 1);
    return out;
}

std::array<RationalFunction, 4> geodesic_conditions(const ChristoffelSet& cs) {
    Symbol xs = Symbol::x(), ys = Symbol::y();
    auto dx = [&](const RF& v) { return v.derivative(xs); };
    auto dy = [&](const RF& v) { return v.derivative(ys); };
    const RF &a = cs.a, &b = cs.b, &c = cs.c, &d = cs.d, &e = cs.e, &f = cs.f;
    return {
        dy(a) - dx(b) + b * e - c * d,
        dy(b) - dx(c) + (a * c - b * b) + (b * f - c * e),
        dy(d) - dx(e) - (a * e - b * d) - (d * f - e * e),
        dx(b + f) - dy(a + e),
    };
}

// ---------------------------------------------------------------------------
// Gauge search
// ---------------------------------------------------------------------------

namespace {

// scratch amplitude symbols for the template search
const std::array<const char*, 4> kAmplitudeNames{"gaugeAmp0", "gaugeAmp1", "gaugeAmp2", "gaugeAmp3"};

struct Template {
    std::vector<std::pair<std::int64_t, std::int64_t>> monomials; // (m, n) exponents
};

// Laurent series over (x, y, parameters) with coefficients polynomial in the
// amplitude symbols; avoids rational-function normalization in the hot loop.
struct AmpSeries {
    std::map<std::vector<std::int64_t>, Polynomial> terms;

    void add_term(const std::vector<std::int64_t>& e, const Polynomial& p) {
        if (p.is_zero()) return;
        auto [it, inserted] = terms.emplace(e, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

AmpSeries operator+(const AmpSeries& a, const AmpSeries& b) {
    AmpSeries r = a;
    for (const auto& [e, p] : b.terms) r.add_term(e, p);
    return r;
}

AmpSeries operator-(const AmpSeries& a, const AmpSeries& b) {
    AmpSeries r = a;
    for (const auto& [e, p] : b.terms) r.add_term(e, -p);
    return r;
}

AmpSeries operator*(const AmpSeries& a, const AmpSeries& b) {
    AmpSeries r;
    for (const auto& [ea, pa] : a.terms)
        for (const auto& [eb, pb] : b.terms) {
            std::vector<std::int64_t> e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            while (!e.empty() && e.back() == 0) e.pop_back();
            r.add_term(e, pa * pb);
        }
    return r;
}

AmpSeries series_derivative(const AmpSeries& a, std::size_t axis) {
    AmpSeries r;
    for (const auto& [e, p] : a.terms) {
        std::int64_t k = axis < e.size() ? e[axis] : 0;
        if (k == 0) continue;
        std::vector<std::int64_t> ne = e;
        ne[axis] -= 1;
        while (!ne.empty() && ne.back() == 0) ne.pop_back();
        r.add_term(ne, p.scale(Rational(static_cast<long>(k))));
    }
    return r;
}

std::optional<AmpSeries> series_from_rf(const RF& f) {
    auto lt = detail::laurent_terms(f);
    if (!lt) return std::nullopt;
    AmpSeries s;
    for (const auto& t : *lt) s.add_term(t.exps, Polynomial(t.coeff));
    return s;
}

bool solve_amplitudes(std::vector<Polynomial> eqs, std::vector<Symbol> unknowns,
                      std::map<std::uint32_t, Rational>& assignment) {
    // simplify
    std::vector<Polynomial> live;
    for (const Polynomial& e : eqs) {
        if (e.is_zero()) continue;
        if (e.is_constant()) return false;
        live.push_back(e);
    }
    if (live.empty()) {
        for (Symbol s : unknowns) assignment.emplace(s.id, Rational(0));
        return true;
    }
    // pick an equation involving exactly one unknown
    for (std::size_t idx = 0; idx < live.size(); ++idx) {
        const Polynomial& eq = live[idx];
        Symbol the_unknown{0};
        int count = 0;
        for (Symbol s : unknowns)
            if (eq.depends_on(s)) {
                the_unknown = s;
                ++count;
            }
        if (count != 1) continue;
        // univariate in the_unknown
        std::vector<Rational> coeffs(eq.degree_in(the_unknown) + 1, Rational(0));
        bool pure = true;
        for (std::uint32_t k = 0; k < coeffs.size(); ++k) {
            Polynomial c = eq.coefficient_of(the_unknown, k);
            if (!c.is_constant()) {
                pure = false;
                break;
            }
            coeffs[k] = c.constant_value();
        }
        if (!pure) continue;
        std::vector<Rational> roots = detail::rational_roots(coeffs);
        std::sort(roots.begin(), roots.end());
        for (const Rational& r : roots) {
            std::vector<Polynomial> next;
            next.reserve(live.size());
            for (const Polynomial& e : live) next.push_back(e.substitute(the_unknown, r));
            std::vector<Symbol> remaining;
            for (Symbol s : unknowns)
                if (!(s == the_unknown)) remaining.push_back(s);
            std::map<std::uint32_t, Rational> sub = assignment;
            sub.emplace(the_unknown.id, r);
            if (solve_amplitudes(next, remaining, sub)) {
                assignment = sub;
                return true;
            }
        }
        return false; // no root of a required equation works
    }
    return false; // nothing univariate: give up on this template
}

std::vector<Template> build_templates(int bound) {
    std::vector<Template> out;
    out.push_back({}); // zero
    std::vector<std::pair<std::int64_t, std::int64_t>> singles;
    for (std::int64_t m = -bound; m <= bound; ++m)
        for (std::int64_t nn = -bound; nn <= bound; ++nn) singles.emplace_back(m, nn);
    std::sort(singles.begin(), singles.end(), [](const auto& a, const auto& b) {
        auto mag = [](const std::pair<std::int64_t, std::int64_t>& p) {
            return std::abs(p.first) + std::abs(p.second);
        };
        if (mag(a) != mag(b)) return mag(a) < mag(b);
        return a < b;
    });
    for (const auto& s : singles) out.push_back({{s}});
    for (std::size_t i = 0; i < singles.size(); ++i)
        for (std::size_t j = i + 1; j < singles.size(); ++j) out.push_back({{singles[i], singles[j]}});
    return out;
}

RF template_function(const Template& t, const std::vector<Symbol>& amps, std::size_t amp_offset) {
    RF out;
    for (std::size_t i = 0; i < t.monomials.size(); ++i) {
        auto [m, nn] = t.monomials[i];
        RF mono = detail::laurent_monomial({m, nn}, Rational(1));
        out += RF::variable(amps[amp_offset + i]) * mono;
    }
    return out;
}

} // namespace

std::optional<GaugeChoice> gauge_search(const RootCoefficients& root, int bound) {
    if (bound < 0 || bound > 3) throw std::invalid_argument("gauge search bound must be in [0, 3]");
    std::vector<Symbol> amps;
    for (const char* name : kAmplitudeNames) amps.push_back(declare_parameter(name));

    // fast series path needs Laurent root coefficients; otherwise fall back to
    // full rational-function arithmetic per template
    auto sc = series_from_rf(root.c), sg = series_from_rf(root.g), sh = series_from_rf(root.h),
         sd = series_from_rf(root.d);
    bool fast = sc && sg && sh && sd;

    std::vector<Template> templates = build_templates(bound);
    for (const Template& bt : templates) {
        for (const Template& et : templates) {
            std::vector<Symbol> unknowns;
            for (std::size_t i = 0; i < bt.monomials.size(); ++i) unknowns.push_back(amps[i]);
            for (std::size_t i = 0; i < et.monomials.size(); ++i) unknowns.push_back(amps[2 + i]);
            std::vector<Polynomial> eqs;
            if (fast) {
                AmpSeries b, e;
                for (std::size_t i = 0; i < bt.monomials.size(); ++i)
                    b.add_term({bt.monomials[i].first, bt.monomials[i].second},
                               Polynomial::variable(amps[i]));
                for (std::size_t i = 0; i < et.monomials.size(); ++i)
                    e.add_term({et.monomials[i].first, et.monomials[i].second},
                               Polynomial::variable(amps[2 + i]));
                // flatness residuals with a = h + 2e and f = g + 2b substituted
                auto dxs = [](const AmpSeries& s) { return series_derivative(s, 0); };
                auto dys = [](const AmpSeries& s) { return series_derivative(s, 1); };
                AmpSeries two;
                two.add_term({}, Polynomial(Rational(2)));
                AmpSeries three;
                three.add_term({}, Polynomial(Rational(3)));
                AmpSeries r1 = dys(*sh) + two * dys(e) - dxs(b) + b * e - *sc * *sd;
                AmpSeries r2 = dys(b) + b * b + b * *sg + *sc * e + *sc * *sh - dxs(*sc);
                AmpSeries r3 = dys(*sd) - dxs(e) - *sh * e - e * e - b * *sd - *sd * *sg;
                AmpSeries r4 = three * dxs(b) + dxs(*sg) - three * dys(e) - dys(*sh);
                for (const AmpSeries* r : {&r1, &r2, &r3, &r4})
                    for (const auto& [pos, poly] : r->terms) eqs.push_back(poly);
            } else {
                RF b = template_function(bt, amps, 0);
                RF e = template_function(et, amps, 2);
                ChristoffelSet cs = complete(root, {b, e});
                for (const RF& res : geodesic_conditions(cs)) {
                    if (res.is_zero()) continue;
                    std::map<Monomial, Polynomial, GrevlexLess> grouped;
                    for (const auto& [m, coeff] : res.numerator().terms()) {
                        std::vector<std::uint32_t> rest = m.exps;
                        std::vector<std::uint32_t> amp_part(rest.size(), 0);
                        for (Symbol s : amps) {
                            if (s.id < rest.size()) {
                                amp_part[s.id] = rest[s.id];
                                rest[s.id] = 0;
                            }
                        }
                        grouped[Monomial{std::move(rest)}] +=
                            Polynomial::term(coeff, Monomial{std::move(amp_part)});
                    }
                    for (auto& [m, p] : grouped) eqs.push_back(p);
                }
            }
            std::map<std::uint32_t, Rational> assignment;
            if (!solve_amplitudes(eqs, unknowns, assignment)) continue;
            // materialize the gauge with the solved amplitudes
            auto materialize = [&](const Template& t, std::size_t offset) {
                RF out;
                for (std::size_t i = 0; i < t.monomials.size(); ++i) {
                    auto [m, nn] = t.monomials[i];
                    Rational amp = assignment.at(amps[offset + i].id);
                    if (amp == 0) continue;
                    out += detail::laurent_monomial({m, nn}, amp);
                }
                return out;
            };
            GaugeChoice gauge{materialize(bt, 0), materialize(et, 2)};
            // confirm with the plain residuals
            auto res = geodesic_conditions(complete(root, gauge));
            bool ok = true;
            for (const RF& r : res)
                if (!r.is_zero()) ok = false;
            if (ok) return gauge;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Metric integration
// ---------------------------------------------------------------------------

namespace {

struct State3 {
    double p, q, r;
};

State3 operator+(State3 a, State3 b) { return {a.p + b.p, a.q + b.q, a.r + b.r}; }
State3 operator*(double s, State3 a) { return {s * a.p, s * a.q, s * a.r}; }

} // namespace

MetricState metric_integrate(const ChristoffelSet& cs, Point start, MetricState state,
                             const std::vector<Point>& path, int steps_per_unit) {
    if (steps_per_unit < 1) throw std::invalid_argument("steps_per_unit must be positive");
    State3 s{state.p, state.q, state.r};
    Point cur = start;
    for (const Point& target : path) {
        double dx = target.x - cur.x, dy = target.y - cur.y;
        double len = std::hypot(dx, dy);
        int steps = std::max(1, static_cast<int>(std::ceil(len * steps_per_unit)));
        double h = 1.0 / steps;
        auto rhs = [&](double t, const State3& v) {
            double x = cur.x + t * dx, y = cur.y + t * dy;
            double a = cs.a.evaluate_double(x, y), b = cs.b.evaluate_double(x, y),
                   c = cs.c.evaluate_double(x, y), d = cs.d.evaluate_double(x, y),
                   e = cs.e.evaluate_double(x, y), f = cs.f.evaluate_double(x, y);
            double px = -2.0 * (a * v.p + d * v.q);
            double qx = -b * v.p - (a + e) * v.q - d * v.r;
            double rx = -2.0 * (b * v.q + e * v.r);
            double py = -2.0 * (b * v.p + e * v.q);
            double qy = -c * v.p - (b + f) * v.q - e * v.r;
            double ry = -2.0 * (c * v.q + f * v.r);
            return State3{px * dx + py * dy, qx * dx + qy * dy, rx * dx + ry * dy};
        };
        for (int i = 0; i < steps; ++i) {
            double t = i * h;
            State3 k1 = rhs(t, s);
            State3 k2 = rhs(t + h / 2, s + (h / 2) * k1);
            State3 k3 = rhs(t + h / 2, s + (h / 2) * k2);
            State3 k4 = rhs(t + h, s + h * k3);
            s = s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        cur = target;
    }
    return MetricState{s.p, s.q, s.r};
}

PathIndependenceReport path_independence_check(const ChristoffelSet& cs, Point start,
                                               MetricState state, Point target, int steps_per_unit) {
    PathIndependenceReport rep;
    rep.axis_first =
        metric_integrate(cs, start, state, {{target.x, start.y}, target}, steps_per_unit);
    rep.diagonal = metric_integrate(cs, start, state, {target}, steps_per_unit);
    rep.max_discrepancy = std::max({std::fabs(rep.axis_first.p - rep.diagonal.p),
                                    std::fabs(rep.axis_first.q - rep.diagonal.q),
                                    std::fabs(rep.axis_first.r - rep.diagonal.r)});
    return rep;
}

} // namespace odelin
