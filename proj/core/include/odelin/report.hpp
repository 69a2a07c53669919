#ifndef ODELIN_REPORT_HPP
#define ODELIN_REPORT_HPP

#include "odelin/corpus.hpp"
#include "odelin/geometry.hpp"
#include "odelin/linearize.hpp"

#include <string>

namespace odelin {

/// Stable JSON rendering of a classification report. Keys:
/// input, normalized, order, candidates[{class, extracted, branch_notes,
/// constraints_ok, criteria, verdict}], total_derivative_of, root_equation,
/// notes. Re-reading and re-printing the output is byte-identical.
std::string report_to_json(const ClassificationReport& report, const std::string& input_text);

/// JSON for the criteria command: {c, g, h, d, criteria:[r1, r2], linearizable}.
std::string criteria_to_json(const RootCoefficients& root,
                             const std::pair<RationalFunction, RationalFunction>& criteria);

/// JSON for the curvature command.
std::string curvature_to_json(const ChristoffelSet& cs, const CurvatureComponents& comps,
                              const std::array<RationalFunction, 4>& residuals);

/// JSON for the generate command: equation text plus the named coefficient map.
std::string generated_to_json(const RootCoefficients& root, FormClass cls, const JetPolynomial& jet);

/// JSON for the corpus run summary.
std::string corpus_summary_to_json(const CorpusRunSummary& summary);

/// Canonicalizes a JSON document (parse + re-dump); used by the round-trip
/// checks.
std::string rewrite_json(const std::string& text);

} // namespace odelin

#endif
