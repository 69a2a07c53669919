#ifndef ODELIN_CORPUS_HPP
#define ODELIN_CORPUS_HPP

#include "odelin/linearize.hpp"

#include <string>
#include <vector>

namespace odelin {

struct SingularRelation : std::runtime_error {
    SingularRelation() : std::runtime_error("relation is independent of y") {}
};

/// One entry of the bundled example catalog. The stored equation is always
/// regenerated from the root; the printed source text is kept alongside for
/// diff reports because several published forms do not reproduce from their
/// stated coefficients.
struct CorpusCase {
    int id = 0;
    RootCoefficients root;
    FormClass cls = FormClass::Fourth18;
    std::vector<std::string> parameters;
    std::string printed_text;     // the published equation, transcribed
    bool printed_text_matches = false;
    std::vector<std::string> notes;

    JetPolynomial equation() const { return generate(root, cls); }
};

/// The twelve catalogued cases, fully materialized (printed-text comparison
/// included).
const std::vector<CorpusCase>& corpus_cases();

/// An implicit solution family F(x, y; parameters) = 0, polynomial and
/// primitive with positive degree in y.
struct ImplicitRelation {
    Polynomial relation;

    explicit ImplicitRelation(Polynomial rel);
};

/// True iff every solution branch of the relation satisfies the equation
/// identically in the parameters: substitutes the constrained derivatives,
/// clears denominators, and reduces modulo the relation (pseudo-remainder in
/// y must vanish).
bool verify_implicit_solution(const ImplicitRelation& rel, const JetPolynomial& f);

struct CorpusCaseResult {
    int id = 0;
    bool class_verified = false;
    bool root_recovered = false;
    bool criteria_zero = false;
    bool exactness_matches = false;
    std::string detail;

    bool ok() const { return class_verified && root_recovered && criteria_zero && exactness_matches; }
};

struct CorpusRunSummary {
    std::vector<CorpusCaseResult> results;
    int failures = 0;
    std::vector<std::string> shared_root_equations; // canonical text, deduplicated
};

/// Classifies every case and checks class, root, criteria, and the exactness
/// split; failures are entries, not exceptions.
CorpusRunSummary run_corpus();

/// Serializes the catalog (the data-file form of the corpus).
std::string corpus_to_json();

} // namespace odelin

#endif
