#include "odelin/linearize.hpp"

namespace odelin {

namespace {

// classification order: total-derivative classes come before the substituted
// forms whose shapes contain theirs
constexpr std::array<FormClass, 8> kClassifyOrder{
    FormClass::Root8,    FormClass::Third10,  FormClass::Third14,  FormClass::Fourth18,
    FormClass::Fourth24, FormClass::Fourth21, FormClass::Fourth30, FormClass::Fourth34};

} // namespace

ClassificationReport classify(const JetPolynomial& f) {
    int order = f.order();
    if (order < 2 || order > 4) throw UnsupportedOrder(order);
    ClassificationReport report;
    report.input = f;

    for (FormClass cls : kClassifyOrder) {
        if (class_order(cls) != order) continue;
        CandidateReport cand;
        cand.cls = cls;
        if (!shape_compatible(f, cls)) {
            cand.extraction_status = ExtractionStatus::ShapeMismatch;
            cand.verdict = Verdict::NotThisClass;
            report.candidates.push_back(std::move(cand));
            continue;
        }
        ExtractionResult ex = extract(f, cls);
        cand.extraction_status = ex.status;
        if (ex.status != ExtractionStatus::Ok) {
            cand.verdict = ex.status == ExtractionStatus::UnderdeterminedD ? Verdict::Inconclusive
                                                                           : Verdict::NotThisClass;
            if (!ex.detail.empty()) cand.branch_notes.push_back(ex.detail);
            report.candidates.push_back(std::move(cand));
            continue;
        }
        // prefer the first candidate whose criteria vanish; sign branches can
        // differ on the criteria
        const ExtractionCandidate* chosen = &ex.candidates.front();
        VerifyReport best = verify(f, cls, chosen->root);
        for (std::size_t i = 1; i < ex.candidates.size() && !best.ok; ++i) {
            VerifyReport alt = verify(f, cls, ex.candidates[i].root);
            if (alt.ok || (alt.regenerated && !best.regenerated)) {
                chosen = &ex.candidates[i];
                best = alt;
            }
        }
        cand.root = chosen->root;
        cand.branch_notes = chosen->branch_notes;
        if (ex.candidates.size() > 1)
            cand.branch_notes.push_back("both sign branches regenerate; reporting the verified one");
        cand.constraints_ok = best.regenerated;
        cand.residuals = best.residuals;
        cand.criteria = best.criteria;
        if (best.ok)
            cand.verdict = Verdict::Linearizable;
        else if (best.regenerated)
            cand.verdict = Verdict::Inconclusive; // class matches, criteria nonzero
        else
            cand.verdict = Verdict::NotThisClass;
        report.candidates.push_back(std::move(cand));
    }

    for (const CandidateReport& cand : report.candidates) {
        if (cand.verdict == Verdict::Linearizable && cand.root) {
            report.root_equation = generate(*cand.root, FormClass::Root8);
            break;
        }
    }

    auto exact = is_total_derivative(f);
    if (std::holds_alternative<JetPolynomial>(exact)) {
        report.total_derivative_of = std::get<JetPolynomial>(exact);
    } else {
        report.total_derivative_obstruction = std::get<NotExact>(exact).obstruction;
    }

    bool any_shape = false;
    for (const CandidateReport& cand : report.candidates)
        if (cand.extraction_status != ExtractionStatus::ShapeMismatch) any_shape = true;
    if (!any_shape) report.notes.push_back("no catalogued class matches the equation shape");

    return report;
}

} // namespace odelin
