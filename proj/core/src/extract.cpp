#include "odelin/linearize.hpp"

#include "solve_util.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

namespace odelin {

namespace {

using RF = RationalFunction;
using detail::LaurentTerm;
using detail::falling;
using detail::laurent_monomial;
using detail::laurent_terms;
using detail::rational_roots;

RF rf_int(long v) { return RF(Rational(v)); }

// ---------------------------------------------------------------------------
// Linear relation solving. The relation L(w) = t is probed from the class
// generator itself, so no expanded coefficient formulas are transcribed.
// ---------------------------------------------------------------------------

struct LinearOperator {
    // L(w) = sum over i+j <= 2 of lam[i][j] * d^i/dx^i d^j/dy^j w
    RF lam[3][3];

    RF apply(const RF& w) const {
        Symbol x = Symbol::x(), y = Symbol::y();
        RF total;
        RF dx0 = w;
        for (int i = 0; i <= 2; ++i) {
            RF dxy = dx0;
            for (int j = 0; j <= 2 - i; ++j) {
                if (!lam[i][j].is_zero()) total += lam[i][j] * dxy;
                dxy = dxy.derivative(y);
            }
            dx0 = dx0.derivative(x);
        }
        return total;
    }

    bool is_zero() const {
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2 - i; ++j)
                if (!lam[i][j].is_zero()) return false;
        return true;
    }
};

using SlotFn = std::function<RF(const RF&)>; // w -> (slot value of generate with w) - base

// Fits a second-order linear differential operator to the probed slot map and
// cross-checks it on cubic probes.
std::optional<LinearOperator> fit_linear_operator(const SlotFn& G) {
    Symbol xs = Symbol::x(), ys = Symbol::y();
    RF x = RF::variable(xs), y = RF::variable(ys);
    LinearOperator L;
    RF g1 = G(rf_int(1));
    L.lam[0][0] = g1;
    RF gx = G(x);
    L.lam[1][0] = gx - L.lam[0][0] * x;
    RF gy = G(y);
    L.lam[0][1] = gy - L.lam[0][0] * y;
    RF gxx = G(x * x);
    L.lam[2][0] = (gxx - L.lam[0][0] * x * x - rf_int(2) * L.lam[1][0] * x) / rf_int(2);
    RF gxy = G(x * y);
    L.lam[1][1] = gxy - L.lam[0][0] * x * y - L.lam[1][0] * y - L.lam[0][1] * x;
    RF gyy = G(y * y);
    L.lam[0][2] = (gyy - L.lam[0][0] * y * y - rf_int(2) * L.lam[0][1] * y) / rf_int(2);
    for (const RF& probe : {x * x * x, x * x * y, x * y * y, y * y * y}) {
        if (!(L.apply(probe) == G(probe))) return std::nullopt;
    }
    return L;
}

// Greedy Laurent peeling with backtracking: finds w with L(w) = t when w is a
// short sum of Laurent monomials (parameters allowed).
class LaurentPeeler {
public:
    LaurentPeeler(const LinearOperator& L, bool x_only) : L_(L), x_only_(x_only) {}

    std::optional<RF> solve(const RF& target) {
        auto all = solve_all(target, 1);
        if (all.empty()) return std::nullopt;
        return all.front();
    }

    // Underdetermined relations admit several short solutions; enumerate up to
    // a cap so callers can pick one consistent with the remaining slots.
    std::vector<RF> solve_all(const RF& target, std::size_t cap) {
        solutions_.clear();
        cap_ = cap;
        auto tt = laurent_terms(target);
        if (!tt) return {};
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2 - i; ++j)
                if (!L_.lam[i][j].is_zero() && !L_.lam[i][j].is_laurent()) return {};
        visited_ = 0;
        recurse(target, RF(), 0);
        return solutions_;
    }

private:
    void recurse(const RF& t, const RF& acc, int depth) {
        if (solutions_.size() >= cap_) return;
        if (t.is_zero()) {
            if (std::find(solutions_.begin(), solutions_.end(), acc) == solutions_.end())
                solutions_.push_back(acc);
            return;
        }
        if (depth > 8 || ++visited_ > 4000) return;
        auto terms = laurent_terms(t);
        if (!terms || terms->empty()) return;
        // deterministic pivot: lexicographically largest exponent vector
        const LaurentTerm* pivot = &terms->front();
        for (const auto& term : *terms)
            if (term.exps > pivot->exps) pivot = &term;

        // candidate monomial exponents: every way a single operator term can
        // land on the pivot position
        std::set<std::vector<std::int64_t>> cand_exps;
        for (int i = 0; i <= 2; ++i) {
            for (int j = 0; j <= 2 - i; ++j) {
                if (L_.lam[i][j].is_zero()) continue;
                auto lt = laurent_terms(L_.lam[i][j]);
                if (!lt) continue;
                for (const auto& op_term : *lt) {
                    std::size_t width = std::max({pivot->exps.size(), op_term.exps.size(),
                                                  static_cast<std::size_t>(2)});
                    std::vector<std::int64_t> w(width, 0);
                    for (std::size_t k = 0; k < width; ++k) {
                        std::int64_t pe = k < pivot->exps.size() ? pivot->exps[k] : 0;
                        std::int64_t oe = k < op_term.exps.size() ? op_term.exps[k] : 0;
                        w[k] = pe - oe;
                    }
                    w[0] += i;
                    w[1] += j;
                    if (x_only_ && w[1] != 0) continue;
                    Rational ff = falling(w[0], static_cast<unsigned>(i)) *
                                  falling(w[1], static_cast<unsigned>(j));
                    if (ff == 0) continue;
                    while (!w.empty() && w.back() == 0) w.pop_back();
                    cand_exps.insert(std::move(w));
                }
            }
        }
        // the amplitude comes from the operator's total response at the pivot,
        // which may collect several operator terms
        for (const auto& exps : cand_exps) {
            if (solutions_.size() >= cap_) return;
            RF response = L_.apply(laurent_monomial(exps, Rational(1)));
            auto rt = laurent_terms(response);
            if (!rt) continue;
            Rational at_pivot(0);
            for (const auto& term : *rt)
                if (term.exps == pivot->exps) at_pivot = term.coeff;
            if (at_pivot == 0) continue;
            Rational omega = pivot->coeff / at_pivot;
            RF piece = laurent_monomial(exps, omega);
            RF rest = t - L_.apply(piece);
            if (rest == t) continue;
            recurse(rest, acc + piece, depth + 1);
        }
    }

    LinearOperator L_;
    bool x_only_;
    long visited_ = 0;
    std::size_t cap_ = 1;
    std::vector<RF> solutions_;
};

// ---------------------------------------------------------------------------
// Extraction steps
// ---------------------------------------------------------------------------

struct StepError {
    ExtractionStatus status;
    std::string detail;
};

using StepResult = std::variant<RF, StepError>;

struct Chain {
    const JetPolynomial& f;
    FormClass cls;

    RF slot(const JetPolynomial& jet, const DerivMonomial& m) const { return jet.coefficient(m); }

    // Solves slot(generate) == slot(f) for a coefficient entering the slot by
    // pure multiplication: w = (f[slot] - gen(w=0)[slot]) / lambda with
    // lambda = gen(w=1)[slot] - gen(w=0)[slot]. Returns nullopt when lambda
    // vanishes (degenerate branch).
    std::optional<RF> divide_step(const DerivMonomial& slot_m,
                                  const std::function<RootCoefficients(const RF&)>& with) const {
        RF base = slot(generate(with(RF()), cls), slot_m);
        RF lambda = slot(generate(with(rf_int(1)), cls), slot_m) - base;
        if (lambda.is_zero()) return std::nullopt;
        return (slot(f, slot_m) - base) / lambda;
    }

    std::optional<LinearOperator> fit_for(const DerivMonomial& slot_m,
                                          const std::function<RootCoefficients(const RF&)>& with) const {
        RF base = slot(generate(with(RF()), cls), slot_m);
        SlotFn G = [&](const RF& w) { return slot(generate(with(w), cls), slot_m) - base; };
        return fit_linear_operator(G);
    }

    StepResult peel_step(const DerivMonomial& slot_m,
                         const std::function<RootCoefficients(const RF&)>& with, bool x_only) const {
        RF base = slot(generate(with(RF()), cls), slot_m);
        SlotFn G = [&](const RF& w) { return slot(generate(with(w), cls), slot_m) - base; };
        auto L = fit_linear_operator(G);
        if (!L) return StepError{ExtractionStatus::InconsistentCoefficients,
                                 "coefficient relation is not second-order linear"};
        RF target = slot(f, slot_m) - base;
        if (target.is_zero() && L->is_zero())
            return StepError{ExtractionStatus::UnderdeterminedD,
                             "coefficient is unconstrained at its defining slot"};
        if (L->is_zero())
            return StepError{ExtractionStatus::InconsistentCoefficients,
                             "slot does not involve the unknown coefficient"};
        LaurentPeeler peeler(*L, x_only);
        auto w = peeler.solve(target);
        if (!w) return StepError{ExtractionStatus::InconsistentCoefficients,
                                 "no Laurent-template solution matches the coefficient relation"};
        return *w;
    }

    // First unknown of a degenerate branch: the slot value is a polynomial-
    // differential expression in w alone. Candidate monomial shapes are read
    // from the target and the scale is pinned by exact interpolation in the
    // monomial amplitude. Several monomials can satisfy the slot (the relation
    // is quadratic or cubic), so all of them are returned and the caller
    // branches. In partial mode only the Laurent positions reachable by the
    // unknown are matched; the slot may then carry contributions of a later
    // coefficient at other positions.
    std::variant<std::vector<RF>, StepError> nonlinear_step(
        const DerivMonomial& slot_m, const std::function<RootCoefficients(const RF&)>& with,
        int max_power, bool partial = false) const {
        RF target = slot(f, slot_m);
        RF base = slot(generate(with(RF()), cls), slot_m);
        target = target - base;
        auto tt = laurent_terms(target);
        if (!tt) return StepError{ExtractionStatus::InconsistentCoefficients,
                                  "degenerate branch requires Laurent coefficients"};
        for (const auto& t : *tt)
            if (t.exps.size() > 2)
                return StepError{ExtractionStatus::InconsistentCoefficients,
                                 "degenerate branch supports parameter-free leading coefficients only"};
        // candidate exponents from every interpretation of every target term;
        // (0, -1) is always tried: it is the one shape whose power and
        // derivative terms coincide, so it can sit in the relation's kernel
        // and leave the slot blank
        std::set<std::pair<std::int64_t, std::int64_t>> cands;
        cands.emplace(0, -1);
        for (const auto& t : *tt) {
            std::int64_t p = t.exps.size() > 0 ? t.exps[0] : 0;
            std::int64_t q = t.exps.size() > 1 ? t.exps[1] : 0;
            auto add = [&](std::int64_t num_a, std::int64_t num_b, std::int64_t den) {
                if (num_a % den || num_b % den) return;
                cands.emplace(num_a / den, num_b / den);
            };
            add(p, q + 2 * 1, 1);      // second y-derivative of w
            add(p, q + 1, 1);          // first y-derivative
            add(p, q, 2);              // quadratic term
            add(p, q + 1, 2);          // w * w_y
            if (max_power >= 3) {
                add(p, q, 3);          // cubic term
                add(p, q + 2, 1);
            }
        }
        std::vector<RF> found;
        // zero explains a blank slot, and in partial mode the unknown may
        // contribute nothing at all
        if (target.is_zero() || partial) found.push_back(RF());
        std::vector<Rational> grid;
        for (long j = 1; j <= max_power + 1; ++j) grid.emplace_back(j);
        for (const auto& [a, b] : cands) {
            std::vector<std::int64_t> exps{a, b};
            // slot values at amplitudes 0, 1, .., max_power fix the amplitude
            // polynomial per Laurent position
            std::vector<std::optional<std::vector<LaurentTerm>>> samples;
            bool bad = false;
            for (const auto& j : grid) {
                RF w = laurent_monomial(exps, j);
                auto s = laurent_terms(slot(generate(with(w), cls), slot_m) - base);
                if (!s) {
                    bad = true;
                    break;
                }
                samples.push_back(s);
            }
            if (bad) continue;
            // collect positions; partial mode matches only where the unknown
            // can respond
            std::set<std::vector<std::int64_t>> positions;
            for (const auto& s : samples)
                for (const auto& t : *s) positions.insert(t.exps);
            if (!partial)
                for (const auto& t : *tt) positions.insert(t.exps);
            auto coeff_at = [](const std::vector<LaurentTerm>& terms,
                               const std::vector<std::int64_t>& pos) {
                for (const auto& t : terms)
                    if (t.exps == pos) return t.coeff;
                return Rational(0);
            };
            std::vector<Rational> lambda_candidates;
            bool first_position = true;
            for (const auto& pos : positions) {
                // interpolate amplitude polynomial p(z) with p(0)=0 through the grid
                std::vector<Rational> values;
                for (const auto& s : samples) values.push_back(coeff_at(*s, pos));
                // Newton interpolation on points (0,0),(1,v1),..,(n,vn)
                std::vector<Rational> xs{Rational(0)};
                std::vector<Rational> ys{Rational(0)};
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    xs.push_back(grid[i]);
                    ys.push_back(values[i]);
                }
                std::size_t n = xs.size();
                std::vector<std::vector<Rational>> dd(n, std::vector<Rational>(n, Rational(0)));
                for (std::size_t i = 0; i < n; ++i) dd[i][0] = ys[i];
                for (std::size_t j = 1; j < n; ++j)
                    for (std::size_t i = 0; i + j < n; ++i)
                        dd[i][j] = (dd[i + 1][j - 1] - dd[i][j - 1]) / (xs[i + j] - xs[i]);
                // expand Newton form to coefficients
                std::vector<Rational> poly{dd[0][n - 1]};
                for (std::size_t j = n - 1; j-- > 0;) {
                    std::vector<Rational> next(poly.size() + 1, Rational(0));
                    for (std::size_t i = 0; i < poly.size(); ++i) {
                        next[i + 1] += poly[i];
                        next[i] -= poly[i] * xs[j];
                    }
                    next[0] += dd[0][j];
                    poly = std::move(next);
                }
                // solve poly(z) == target coefficient at this position
                Rational tgt = coeff_at(*tt, pos);
                std::vector<Rational> eq = poly;
                if (!eq.empty()) eq[0] -= tgt;
                if (first_position) {
                    lambda_candidates = rational_roots(eq);
                    first_position = false;
                } else {
                    std::vector<Rational> kept;
                    for (const auto& z : lambda_candidates) {
                        Rational v(0);
                        for (std::size_t k = eq.size(); k-- > 0;) v = v * z + eq[k];
                        if (v == 0) kept.push_back(z);
                    }
                    lambda_candidates = std::move(kept);
                }
                if (lambda_candidates.empty()) break;
            }
            std::sort(lambda_candidates.begin(), lambda_candidates.end());
            for (const Rational& z : lambda_candidates) {
                if (z == 0) continue;
                RF w = laurent_monomial(exps, z);
                RF response = slot(generate(with(w), cls), slot_m) - base;
                bool match;
                if (partial) {
                    // agree at every position the response touches
                    auto rterms = laurent_terms(response);
                    match = rterms.has_value();
                    if (match) {
                        auto coeff_in_target = [&](const std::vector<std::int64_t>& pos) {
                            for (const auto& t : *tt)
                                if (t.exps == pos) return t.coeff;
                            return Rational(0);
                        };
                        for (const auto& rt2 : *rterms)
                            if (rt2.coeff != coeff_in_target(rt2.exps)) match = false;
                    }
                } else {
                    match = response == target;
                }
                if (match && std::find(found.begin(), found.end(), w) == found.end())
                    found.push_back(w);
            }
        }
        if (found.empty())
            return StepError{ExtractionStatus::InconsistentCoefficients,
                             "no monomial solves the degenerate leading-coefficient relation"};
        return found;
    }

    // The defining slot of d can have a nontrivial kernel (the relation is a
    // first- or second-order derivative expression), leaving part of d
    // invisible there. When regeneration mismatches, correct d through the
    // other slots that depend on it affinely.
    bool repair_d(RootCoefficients& root, const std::vector<DerivMonomial>& slots) const {
        auto mismatch_count = [&](const RootCoefficients& r) {
            return (f - generate(r, cls)).terms().size();
        };
        std::size_t current = mismatch_count(root);
        for (int round = 0; round < 6 && current > 0; ++round) {
            JetPolynomial regen = generate(root, cls);
            bool progressed = false;
            for (const DerivMonomial& slot_m : slots) {
                RF target = slot(f, slot_m) - slot(regen, slot_m);
                if (target.is_zero()) continue;
                RootCoefficients base_root = root;
                SlotFn G = [&](const RF& w) {
                    RootCoefficients r2 = base_root;
                    r2.d = base_root.d + w;
                    return slot(generate(r2, cls), slot_m) - slot(regen, slot_m);
                };
                auto L = fit_linear_operator(G);
                if (!L || L->is_zero()) continue;
                LaurentPeeler peeler(*L, false);
                // the relation can be underdetermined; keep only a correction
                // that strictly shrinks the global mismatch
                for (const RF& delta : peeler.solve_all(target, 6)) {
                    if (delta.is_zero()) continue;
                    RootCoefficients trial = root;
                    trial.d += delta;
                    std::size_t trial_count = mismatch_count(trial);
                    if (trial_count < current) {
                        root = trial;
                        current = trial_count;
                        progressed = true;
                        break;
                    }
                }
                if (progressed) break;
            }
            if (!progressed) break;
        }
        return current == 0;
    }

    // d recovered through its y-derivative at one slot plus an x-only
    // correction pinned at a second slot.
    StepResult integrate_d(const DerivMonomial& dy_slot, const DerivMonomial& x_slot,
                           const RF& c, const RF& g, const RF& h,
                           std::vector<std::string>& notes) const {
        auto with_d = [&](const RF& d) { return RootCoefficients{c, g, h, d}; };
        RF base = slot(generate(with_d(RF()), cls), dy_slot);
        Symbol ys = Symbol::y();
        RF lambda = slot(generate(with_d(RF::variable(ys)), cls), dy_slot) - base;
        if (!lambda.is_constant() || lambda.is_zero())
            return StepError{ExtractionStatus::InconsistentCoefficients,
                             "derivative slot is not a clean first-derivative relation"};
        RF dy = (slot(f, dy_slot) - base) / lambda;
        auto d0 = antiderivative(dy, ys);
        if (!d0) return StepError{ExtractionStatus::LogTermRequired,
                                  "the coefficient integral has a logarithmic part"};
        auto with_k = [&](const RF& k) { return RootCoefficients{c, g, h, *d0 + k}; };
        RF base2 = slot(generate(with_k(RF()), cls), x_slot);
        RF target2 = slot(f, x_slot) - base2;
        if (target2.is_zero()) {
            notes.push_back("d fixed up to additive terms invisible to this form (set to zero)");
            return *d0;
        }
        auto res = peel_step(x_slot, with_k, /*x_only=*/true);
        if (std::holds_alternative<StepError>(res)) return res;
        notes.push_back("d includes an x-only part recovered from the constant slot");
        return *d0 + std::get<RF>(res);
    }
};

DerivMonomial M(std::uint8_t a, std::uint8_t b = 0, std::uint8_t c = 0, std::uint8_t d = 0) {
    return DerivMonomial{{a, b, c, d}};
}

// slots that depend on d affinely, used by the repair pass
std::vector<DerivMonomial> d_repair_slots(FormClass cls) {
    switch (cls) {
        case FormClass::Third10: return {M(1), M(0)};
        case FormClass::Third14: return {M(1), M(0)};
        case FormClass::Fourth18: return {M(0, 1), M(1), M(0)};
        case FormClass::Fourth21: return {M(2), M(1)};
        case FormClass::Fourth24: return {M(0, 1), M(2), M(1), M(0)};
        case FormClass::Fourth30: return {M(0, 1), M(2), M(1), M(0)};
        case FormClass::Fourth34: return {M(2), M(1)};
        default: return {};
    }
}

void finalize_candidate(const JetPolynomial& f, FormClass cls, RootCoefficients root,
                        std::vector<std::string> notes, ExtractionResult& out,
                        std::string& mismatch_detail) {
    JetPolynomial regen = generate(root, cls);
    if (regen == f) {
        out.candidates.push_back({std::move(root), std::move(notes)});
    } else if (mismatch_detail.empty()) {
        JetPolynomial diff = f - regen;
        mismatch_detail = "candidate root fails to regenerate the input (" +
                          std::to_string(diff.terms().size()) + " coefficient slots differ)";
    }
}

} // namespace

ExtractionResult extract(const JetPolynomial& f, FormClass cls) {
    ExtractionResult out;
    if (!shape_compatible(f, cls)) {
        out.status = ExtractionStatus::ShapeMismatch;
        out.detail = "input does not match the " + class_name(cls) + " shape";
        return out;
    }
    Chain chain{f, cls};
    std::string mismatch_detail;
    StepError pending{ExtractionStatus::InconsistentCoefficients, ""};
    bool have_error = false;
    auto fail = [&](ExtractionStatus s, const std::string& detail) {
        if (!have_error) {
            pending = {s, detail};
            have_error = true;
        }
    };

    // degenerate branch (vanishing leading coefficient): solve g from its
    // nonlinear slot relation, then h and d from linear ones, branching over
    // every g candidate
    auto run_degenerate = [&](const DerivMonomial& g_slot, const DerivMonomial& h_slot,
                              const DerivMonomial& d_slot, int max_power) {
        auto gs = chain.nonlinear_step(
            g_slot, [&](const RF& w) { return RootCoefficients{RF(), w, RF(), RF()}; }, max_power);
        if (std::holds_alternative<StepError>(gs)) {
            auto e = std::get<StepError>(gs);
            fail(e.status, e.detail);
            return;
        }
        bool saw_zero_g = false;
        for (const RF& gv : std::get<std::vector<RF>>(gs)) {
            if (gv.is_zero()) saw_zero_g = true;
            auto with_h = [&](const RF& w) { return RootCoefficients{RF(), gv, w, RF()}; };
            auto h = chain.peel_step(h_slot, with_h, false);
            if (std::holds_alternative<StepError>(h)) {
                auto e = std::get<StepError>(h);
                fail(e.status, e.detail);
                continue;
            }
            RF h_seen = std::get<RF>(h);

            // resonant g can make the h slot blind to x-only parts of h; the
            // missing part is then matched against its own Laurent slice of
            // the next slot
            std::vector<RF> h_branches{h_seen};
            auto Lh = chain.fit_for(h_slot, with_h);
            bool blind_to_x = Lh && Lh->lam[0][0].is_zero() && Lh->lam[1][0].is_zero() &&
                              Lh->lam[2][0].is_zero();
            if (blind_to_x) {
                auto extra = chain.nonlinear_step(
                    d_slot, [&](const RF& w) { return RootCoefficients{RF(), gv, h_seen + w, RF()}; },
                    max_power, /*partial=*/true);
                if (std::holds_alternative<std::vector<RF>>(extra)) {
                    for (const RF& theta : std::get<std::vector<RF>>(extra)) {
                        if (theta.is_zero()) continue;
                        h_branches.push_back(h_seen + theta);
                    }
                }
            }

            for (const RF& hv : h_branches) {
                auto d = chain.peel_step(
                    d_slot, [&](const RF& w) { return RootCoefficients{RF(), gv, hv, w}; }, false);
                if (std::holds_alternative<StepError>(d)) {
                    auto e = std::get<StepError>(d);
                    fail(e.status, e.detail);
                    continue;
                }
                RootCoefficients cand{RF(), gv, hv, std::get<RF>(d)};
                std::vector<std::string> notes{"degenerate branch: leading coefficient c = 0"};
                if (!(generate(cand, cls) == f) && chain.repair_d(cand, d_repair_slots(cls)))
                    notes.push_back("d completed through secondary slots (primary slot had a kernel)");
                finalize_candidate(f, cls, cand, std::move(notes), out, mismatch_detail);
            }
        }
        if (out.candidates.empty() && saw_zero_g) {
            // resonant leading coefficients (g in the kernel of its own slot
            // relation, or g = 0) can leave h and d visible only through mixed
            // nonlinear slots; sequential matching cannot separate them
            mismatch_detail.clear();
            pending = {ExtractionStatus::InconsistentCoefficients,
                       "resonant degenerate branch: the surviving slots do not separate h and d"};
            have_error = true;
        }
    };

    auto run_branch_from_c = [&](const RF& c, std::vector<std::string> notes) {
        switch (cls) {
            case FormClass::Third14: {
                auto g = chain.divide_step(M(4), [&](const RF& w) { return RootCoefficients{c, w, RF(), RF()}; });
                if (!g) return fail(ExtractionStatus::InconsistentCoefficients, "degenerate slot for g");
                auto h = chain.divide_step(M(3), [&](const RF& w) { return RootCoefficients{c, *g, w, RF()}; });
                if (!h) return fail(ExtractionStatus::InconsistentCoefficients, "degenerate slot for h");
                auto d = chain.divide_step(M(2), [&](const RF& w) { return RootCoefficients{c, *g, *h, w}; });
                if (!d) return fail(ExtractionStatus::InconsistentCoefficients, "degenerate slot for d");
                finalize_candidate(f, cls, {c, *g, *h, *d}, std::move(notes), out, mismatch_detail);
                return;
            }
            case FormClass::Fourth18: {
                auto g = chain.divide_step(M(3, 1), [&](const RF& w) { return RootCoefficients{c, w, RF(), RF()}; });
                if (!g) return fail(ExtractionStatus::InconsistentCoefficients, "degenerate slot for g");
                auto h = chain.divide_step(M(2, 1), [&](const RF& w) { return RootCoefficients{c, *g, w, RF()}; });
                if (!h) return fail(ExtractionStatus::InconsistentCoefficients, "degenerate slot for h");
                auto d = chain.divide_step(M(1, 1), [&](const RF& w) { return RootCoefficients{c, *g, *h, w}; });
                if (!d) return fail(ExtractionStatus::InconsistentCoefficients, "degenerate slot for d");
                finalize_candidate(f, cls, {c, *g, *h, *d}, std::move(notes), out, mismatch_detail);
                return;
            }
            case FormClass::Fourth21: {
                auto g = chain.divide_step(M(6), [&](const RF& w) { return RootCoefficients{c, w, RF(), RF()}; });
                if (!g) return fail(ExtractionStatus::InconsistentCoefficients, "degenerate slot for g");
                auto h = chain.divide_step(M(5), [&](const RF& w) { return RootCoefficients{c, *g, w, RF()}; });
                if (!h) return fail(ExtractionStatus::InconsistentCoefficients, "degenerate slot for h");
                auto d = chain.divide_step(M(4), [&](const RF& w) { return RootCoefficients{c, *g, *h, w}; });
                if (!d) return fail(ExtractionStatus::InconsistentCoefficients, "degenerate slot for d");
                finalize_candidate(f, cls, {c, *g, *h, *d}, std::move(notes), out, mismatch_detail);
                return;
            }
            default:
                return fail(ExtractionStatus::InconsistentCoefficients, "internal: branch misuse");
        }
    };

    switch (cls) {
        case FormClass::Root8: {
            RootCoefficients root{f.coefficient(M(3)), -f.coefficient(M(2)), f.coefficient(M(1)),
                                  -f.coefficient(M(0))};
            finalize_candidate(f, cls, root, {}, out, mismatch_detail);
            break;
        }
        case FormClass::Third10: {
            RF c = f.coefficient(M(2, 1)) / rf_int(3);
            RF g = -f.coefficient(M(1, 1)) / rf_int(2);
            RF h = f.coefficient(M(0, 1));
            std::vector<std::string> notes;
            auto d = chain.integrate_d(M(1), M(0), c, g, h, notes);
            if (std::holds_alternative<StepError>(d)) {
                auto e = std::get<StepError>(d);
                fail(e.status, e.detail);
                break;
            }
            notes.push_back("d determined up to an additive constant (set to zero)");
            RootCoefficients cand{c, g, h, std::get<RF>(d)};
            if (!(generate(cand, cls) == f) && chain.repair_d(cand, d_repair_slots(cls)))
                notes.push_back("d completed through secondary slots (primary slot had a kernel)");
            finalize_candidate(f, cls, cand, std::move(notes), out, mismatch_detail);
            break;
        }
        case FormClass::Third14: {
            RF v = f.coefficient(M(5));
            if (v.is_zero()) {
                run_degenerate(M(3), M(2), M(1), 2);
                break;
            }
            auto c2 = -v / rf_int(3);
            auto c = nth_root(c2, 2);
            if (!c) {
                fail(ExtractionStatus::NotAPerfectPower, "leading coefficient is not a perfect square");
                break;
            }
            run_branch_from_c(*c, {"sign branch: positive square root"});
            run_branch_from_c(-*c, {"sign branch: negative square root"});
            break;
        }
        case FormClass::Fourth18: {
            RF v = f.coefficient(M(4, 1));
            if (v.is_zero()) {
                run_degenerate(M(2, 1), M(1, 1), M(0, 1), 2);
                break;
            }
            auto c = nth_root(-v / rf_int(15), 2);
            if (!c) {
                fail(ExtractionStatus::NotAPerfectPower, "leading coefficient is not a perfect square");
                break;
            }
            run_branch_from_c(*c, {"sign branch: positive square root"});
            run_branch_from_c(-*c, {"sign branch: negative square root"});
            break;
        }
        case FormClass::Fourth21: {
            RF v = f.coefficient(M(7));
            if (v.is_zero()) {
                run_degenerate(M(4), M(3), M(2), 3);
                break;
            }
            auto c = nth_root(v / rf_int(15), 3);
            if (!c) {
                fail(ExtractionStatus::NotAPerfectPower, "leading coefficient is not a perfect cube");
                break;
            }
            run_branch_from_c(*c, {});
            break;
        }
        case FormClass::Fourth24: {
            RF c = f.coefficient(M(2, 0, 1)) / rf_int(3);
            RF g = -f.coefficient(M(1, 0, 1)) / rf_int(2);
            RF h = f.coefficient(M(0, 0, 1));
            std::vector<std::string> notes;
            auto d = chain.integrate_d(M(0, 1), M(0), c, g, h, notes);
            if (std::holds_alternative<StepError>(d)) {
                auto e = std::get<StepError>(d);
                fail(e.status, e.detail);
                break;
            }
            notes.push_back("d determined up to additive a*x + b (set to zero)");
            RootCoefficients cand{c, g, h, std::get<RF>(d)};
            if (!(generate(cand, cls) == f) && chain.repair_d(cand, d_repair_slots(cls)))
                notes.push_back("d completed through secondary slots (primary slot had a kernel)");
            finalize_candidate(f, cls, cand, std::move(notes), out, mismatch_detail);
            break;
        }
        case FormClass::Fourth30: {
            RF c = f.coefficient(M(1, 2)) / rf_int(6);
            RF g = -f.coefficient(M(0, 2)) / rf_int(2);
            RF hv;
            if (!c.is_zero()) {
                auto h = chain.divide_step(M(2, 1), [&](const RF& w) { return RootCoefficients{c, g, w, RF()}; });
                if (!h) {
                    fail(ExtractionStatus::InconsistentCoefficients, "degenerate slot for h");
                    break;
                }
                hv = *h;
            } else {
                auto h = chain.peel_step(M(1, 1), [&](const RF& w) { return RootCoefficients{c, g, w, RF()}; }, false);
                if (std::holds_alternative<StepError>(h)) {
                    auto e = std::get<StepError>(h);
                    fail(e.status, e.detail);
                    break;
                }
                hv = std::get<RF>(h);
            }
            std::vector<std::string> notes;
            if (c.is_zero()) notes.push_back("degenerate branch: leading coefficient c = 0");
            auto d = chain.integrate_d(M(0, 1), M(0), c, g, hv, notes);
            if (std::holds_alternative<StepError>(d)) {
                auto e = std::get<StepError>(d);
                fail(e.status, e.detail);
                break;
            }
            RootCoefficients cand{c, g, hv, std::get<RF>(d)};
            if (!(generate(cand, cls) == f) && chain.repair_d(cand, d_repair_slots(cls)))
                notes.push_back("d completed through secondary slots (primary slot had a kernel)");
            finalize_candidate(f, cls, cand, std::move(notes), out, mismatch_detail);
            break;
        }
        case FormClass::Fourth34: {
            RF c = f.coefficient(M(2, 0, 1)) / rf_int(3);
            RF g = -f.coefficient(M(1, 0, 1)) / rf_int(2);
            RF h = f.coefficient(M(0, 0, 1));
            if (!c.is_zero()) {
                auto d = chain.divide_step(M(4), [&](const RF& w) { return RootCoefficients{c, g, h, w}; });
                if (!d) {
                    fail(ExtractionStatus::InconsistentCoefficients, "degenerate slot for d");
                    break;
                }
                finalize_candidate(f, cls, {c, g, h, *d}, {}, out, mismatch_detail);
            } else {
                auto d = chain.peel_step(M(2), [&](const RF& w) { return RootCoefficients{c, g, h, w}; }, false);
                if (std::holds_alternative<StepError>(d)) {
                    auto e = std::get<StepError>(d);
                    fail(e.status, e.detail);
                    break;
                }
                RootCoefficients cand{c, g, h, std::get<RF>(d)};
                std::vector<std::string> notes{"degenerate branch: leading coefficient c = 0"};
                if (!(generate(cand, cls) == f) && chain.repair_d(cand, d_repair_slots(cls)))
                    notes.push_back("d completed through secondary slots (primary slot had a kernel)");
                finalize_candidate(f, cls, cand, std::move(notes), out, mismatch_detail);
            }
            break;
        }
    }

    if (!out.candidates.empty()) {
        out.status = ExtractionStatus::Ok;
        return out;
    }
    if (!mismatch_detail.empty()) {
        out.status = ExtractionStatus::InconsistentCoefficients;
        out.detail = mismatch_detail;
        return out;
    }
    if (have_error) {
        out.status = pending.status;
        out.detail = pending.detail;
        return out;
    }
    out.status = ExtractionStatus::InconsistentCoefficients;
    out.detail = "extraction produced no candidates";
    return out;
}

} // namespace odelin
