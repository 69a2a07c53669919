#include "odelin/report.hpp"

#include "odelin/parse.hpp"

#include <json.hpp>

namespace odelin {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json root_json(const RootCoefficients& root) {
    return ordered_json{{"c", root.c.to_string()},
                        {"g", root.g.to_string()},
                        {"h", root.h.to_string()},
                        {"d", root.d.to_string()}};
}

} // namespace

std::string report_to_json(const ClassificationReport& report, const std::string& input_text) {
    ordered_json j;
    j["input"] = input_text;
    j["normalized"] = print_canonical(report.input);
    j["order"] = report.input.order();
    j["candidates"] = ordered_json::array();
    for (const CandidateReport& cand : report.candidates) {
        ordered_json c;
        c["class"] = class_name(cand.cls);
        if (cand.root) {
            c["extracted"] = root_json(*cand.root);
        } else {
            c["extracted"] = to_string(cand.extraction_status);
        }
        c["branch_notes"] = cand.branch_notes;
        c["constraints_ok"] = cand.constraints_ok;
        if (cand.criteria) {
            c["criteria"] = {cand.criteria->first.to_string(), cand.criteria->second.to_string()};
        } else {
            c["criteria"] = nullptr;
        }
        c["verdict"] = to_string(cand.verdict);
        j["candidates"].push_back(std::move(c));
    }
    if (report.total_derivative_of) {
        j["total_derivative_of"] = print_canonical(*report.total_derivative_of);
    } else {
        j["total_derivative_of"] = nullptr;
    }
    if (report.root_equation) {
        j["root_equation"] = print_canonical(*report.root_equation);
    } else {
        j["root_equation"] = nullptr;
    }
    ordered_json notes = report.notes;
    if (!report.total_derivative_of && !report.total_derivative_obstruction.empty())
        notes.push_back("not a total derivative: " + report.total_derivative_obstruction);
    j["notes"] = std::move(notes);
    return j.dump(2) + "\n";
}

std::string criteria_to_json(const RootCoefficients& root,
                             const std::pair<RationalFunction, RationalFunction>& criteria) {
    ordered_json j;
    j["root"] = root_json(root);
    j["criteria"] = {criteria.first.to_string(), criteria.second.to_string()};
    j["linearizable"] = criteria.first.is_zero() && criteria.second.is_zero();
    return j.dump(2) + "\n";
}

std::string curvature_to_json(const ChristoffelSet& cs, const CurvatureComponents& comps,
                              const std::array<RationalFunction, 4>& residuals) {
    ordered_json j;
    j["coefficients"] = {{"a", cs.a.to_string()}, {"b", cs.b.to_string()}, {"c", cs.c.to_string()},
                         {"d", cs.d.to_string()}, {"e", cs.e.to_string()}, {"f", cs.f.to_string()}};
    j["curvature"] = {{"R1_112", comps.r1_112.to_string()},
                      {"R1_212", comps.r1_212.to_string()},
                      {"R2_112", comps.r2_112.to_string()},
                      {"R2_212", comps.r2_212.to_string()}};
    ordered_json res = ordered_json::array();
    for (const auto& r : residuals) res.push_back(r.to_string());
    j["conditions"] = std::move(res);
    j["flat"] = comps.all_zero();
    return j.dump(2) + "\n";
}

std::string generated_to_json(const RootCoefficients& root, FormClass cls, const JetPolynomial& jet) {
    ordered_json j;
    j["class"] = class_name(cls);
    j["root"] = root_json(root);
    j["equation"] = print_canonical(jet);
    ordered_json coeffs;
    for (const auto& [name, value] : form_coefficients(jet, cls).named)
        coeffs[name] = value.to_string();
    j["coefficients"] = std::move(coeffs);
    return j.dump(2) + "\n";
}

std::string corpus_summary_to_json(const CorpusRunSummary& summary) {
    ordered_json j;
    ordered_json cases = ordered_json::array();
    for (const CorpusCaseResult& r : summary.results) {
        ordered_json c;
        c["id"] = r.id;
        c["class_verified"] = r.class_verified;
        c["root_recovered"] = r.root_recovered;
        c["criteria_zero"] = r.criteria_zero;
        c["exactness_matches"] = r.exactness_matches;
        c["ok"] = r.ok();
        if (!r.detail.empty()) c["detail"] = r.detail;
        cases.push_back(std::move(c));
    }
    j["cases"] = std::move(cases);
    j["failures"] = summary.failures;
    j["verified"] = std::to_string(summary.results.size() - summary.failures) + "/" +
                    std::to_string(summary.results.size());
    j["root_equations"] = summary.shared_root_equations;
    return j.dump(2) + "\n";
}

std::string rewrite_json(const std::string& text) {
    return nlohmann::ordered_json::parse(text).dump(2) + "\n";
}

} // namespace odelin
