#ifndef ODELIN_LINEARIZE_HPP
#define ODELIN_LINEARIZE_HPP

#include "odelin/jet.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace odelin {

struct UnsupportedOrder : std::runtime_error {
    explicit UnsupportedOrder(int order)
        : std::runtime_error("classification supports orders 2 to 4, got " + std::to_string(order)) {}
};

/// The quadruple of coefficient functions that identifies an equivalence
/// class: the underlying second-order equation is
/// y'' + c y'^3 - g y'^2 + h y' - d = 0.
struct RootCoefficients {
    RationalFunction c, g, h, d;

    bool operator==(const RootCoefficients&) const = default;
    std::string to_string() const;
};

/// The eight catalogued structural forms, named by catalog label.
enum class FormClass { Root8, Third10, Third14, Fourth18, Fourth21, Fourth24, Fourth30, Fourth34 };

constexpr std::array<FormClass, 8> kAllClasses{
    FormClass::Root8,    FormClass::Third10,  FormClass::Third14, FormClass::Fourth18,
    FormClass::Fourth21, FormClass::Fourth24, FormClass::Fourth30, FormClass::Fourth34};

constexpr std::array<FormClass, 5> kFourthOrderClasses{
    FormClass::Fourth18, FormClass::Fourth21, FormClass::Fourth24, FormClass::Fourth30,
    FormClass::Fourth34};

std::string class_name(FormClass c);
std::optional<FormClass> class_from_name(const std::string& name);
int class_order(FormClass c);
/// The two total-derivative classes are exact by construction.
bool class_is_total_derivative(FormClass c);

/// Builds the class form from the root purely by total differentiation and
/// derivative substitution. The result is monic.
JetPolynomial generate(const RootCoefficients& root, FormClass cls);

/// The second-order equation itself (class Root8) as a jet polynomial.
JetPolynomial root_equation(const RootCoefficients& root);

/// The two linearizability residuals for the root quadruple; linearizable at
/// the scalar level iff both are identically zero.
std::pair<RationalFunction, RationalFunction> tresse_criteria(const RootCoefficients& root);

/// Cubic second-order form coefficients E3..E0 with E3=c, E2=-g, E1=h, E0=-d.
struct FormCoefficients {
    FormClass cls;
    std::vector<std::pair<std::string, RationalFunction>> named;

    RationalFunction get(const std::string& name) const;
};

FormCoefficients lie_form(const RootCoefficients& root);
/// Reads the named coefficients of a class-shaped monic jet polynomial using
/// the catalog sign conventions.
FormCoefficients form_coefficients(const JetPolynomial& f, FormClass cls);

/// Shape compatibility between a monic jet polynomial and a class form.
bool shape_compatible(const JetPolynomial& f, FormClass cls);

enum class ExtractionStatus {
    Ok,
    ShapeMismatch,
    NotAPerfectPower,
    LogTermRequired,
    InconsistentCoefficients,
    UnderdeterminedD,
};
std::string to_string(ExtractionStatus s);

struct ExtractionCandidate {
    RootCoefficients root;
    std::vector<std::string> branch_notes;
};

struct ExtractionResult {
    ExtractionStatus status = ExtractionStatus::Ok;
    std::vector<ExtractionCandidate> candidates; // nonempty iff status == Ok
    std::string detail;                          // failure context
};

/// Inverse of generate: recovers candidate root coefficients from an instance
/// of the class form. Degenerate branches (vanishing top coefficient) are
/// solved by coefficient matching; every candidate returned regenerates the
/// input exactly.
ExtractionResult extract(const JetPolynomial& f, FormClass cls);

struct VerifyReport {
    bool ok = false;
    bool regenerated = false;
    bool criteria_zero = false;
    std::vector<std::string> residuals; // names of mismatched coefficients
    std::pair<RationalFunction, RationalFunction> criteria;
};

/// True iff generate(root, cls) equals f structurally and both criteria
/// residuals vanish; mismatched coefficient slots are named in residuals.
VerifyReport verify(const JetPolynomial& f, FormClass cls, const RootCoefficients& root);

struct NotExact {
    std::string obstruction;
};

/// If f = D_x G for a jet polynomial G of order one less, returns G;
/// otherwise reports the first obstruction.
std::variant<JetPolynomial, NotExact> is_total_derivative(const JetPolynomial& f);

/// One formula of the independently transcribed constraint lists, evaluated on
/// a class instance and its root.
struct ConstraintCheck {
    std::string name;       // e.g. "B6"
    bool applies = true;
    bool matches = false;
    std::string instance;   // value read from the equation
    std::string predicted;  // value of the transcribed formula
};

/// Evaluates the transcribed per-class constraint formulas against the
/// coefficients of f (assumed an instance of cls with the given root). These
/// formulas are kept verbatim from their published source, misprints
/// included; disagreements with the regeneration check are diagnostics, and
/// the regeneration check is authoritative.
std::vector<ConstraintCheck> transcribed_constraints(const JetPolynomial& f, FormClass cls,
                                                     const RootCoefficients& root);

enum class Verdict { Linearizable, NotThisClass, Inconclusive };
std::string to_string(Verdict v);

struct CandidateReport {
    FormClass cls;
    ExtractionStatus extraction_status;
    std::optional<RootCoefficients> root;
    std::vector<std::string> branch_notes;
    bool constraints_ok = false;
    std::vector<std::string> residuals;
    std::optional<std::pair<RationalFunction, RationalFunction>> criteria;
    Verdict verdict = Verdict::NotThisClass;
};

struct ClassificationReport {
    JetPolynomial input;
    std::vector<CandidateReport> candidates;
    std::optional<JetPolynomial> total_derivative_of;
    std::string total_derivative_obstruction;
    std::optional<JetPolynomial> root_equation;
    std::vector<std::string> notes;

    bool any_linearizable() const;
};

/// Runs every shape-compatible class in the fixed order (total-derivative
/// classes before their substituted counterparts), verifies each candidate,
/// and reports the exactness test.
ClassificationReport classify(const JetPolynomial& f);

} // namespace odelin

#endif
