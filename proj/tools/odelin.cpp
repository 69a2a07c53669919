// odelin: classify, generate, and verify conditionally linearizable ODEs.

#include "odelin/corpus.hpp"
#include "odelin/geometry.hpp"
#include "odelin/parse.hpp"
#include "odelin/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace odelin;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

std::vector<std::string> split_params(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string read_input(const std::string& inline_expr, const std::string& file) {
    std::string text = inline_expr;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open input file: " + file);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else if (text.empty()) {
        // no inline expression, no file: consume stdin so generate | classify works
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

void print_root(std::ostream& os, const RootCoefficients& root) {
    os << "  c = " << root.c.to_string() << "\n  g = " << root.g.to_string()
       << "\n  h = " << root.h.to_string() << "\n  d = " << root.d.to_string() << "\n";
}

int cmd_classify(const std::string& text, const std::vector<std::string>& params, bool json,
                 const std::string& gauge_b, const std::string& gauge_e, int gauge_bound,
                 bool with_metric, double tolerance, int steps) {
    JetPolynomial f = parse(text, params);
    ClassificationReport report = classify(f);

    // gauge and flatness report for the first verified root
    std::optional<RootCoefficients> verified;
    for (const auto& cand : report.candidates)
        if (cand.verdict == Verdict::Linearizable && cand.root) {
            verified = cand.root;
            break;
        }
    if (verified) {
        std::optional<GaugeChoice> gauge;
        if (!gauge_b.empty() || !gauge_e.empty()) {
            gauge = GaugeChoice{parse_rational(gauge_b.empty() ? "0" : gauge_b, params),
                                parse_rational(gauge_e.empty() ? "0" : gauge_e, params)};
            report.notes.push_back("gauge override supplied");
        } else {
            gauge = gauge_search(*verified, gauge_bound);
            if (!gauge) report.notes.push_back("gauge search exhausted (bound " +
                                               std::to_string(gauge_bound) + "); not a proof of nonexistence");
        }
        if (gauge) {
            ChristoffelSet cs = complete(*verified, *gauge);
            bool flat = curvature(cs).all_zero();
            report.notes.push_back("gauge b = " + gauge->b.to_string() + ", e = " + gauge->e.to_string() +
                                   "; curvature " + (flat ? "vanishes" : "does not vanish"));
            if (with_metric && flat) {
                try {
                    auto pir = path_independence_check(cs, {1.0, 1.0}, MetricState{}, {2.0, 2.0}, steps);
                    bool ok = pir.max_discrepancy < tolerance;
                    std::ostringstream ss;
                    ss << "metric path-independence discrepancy " << pir.max_discrepancy
                       << (ok ? " (within tolerance)" : " (EXCEEDS tolerance)");
                    report.notes.push_back(ss.str());
                } catch (const PoleAtPoint&) {
                    report.notes.push_back("metric integration skipped: pole on the default path");
                } catch (const std::invalid_argument& e) {
                    report.notes.push_back(std::string("metric integration skipped: ") + e.what());
                }
            }
        }
    }

    if (json) {
        std::cout << report_to_json(report, text);
    } else {
        std::cout << "input:      " << text << "\n";
        std::cout << "normalized: " << print_canonical(report.input) << "\n";
        for (const auto& cand : report.candidates) {
            std::cout << "class " << class_name(cand.cls) << ": " << to_string(cand.verdict);
            if (cand.verdict == Verdict::NotThisClass &&
                cand.extraction_status != ExtractionStatus::Ok)
                std::cout << " (" << to_string(cand.extraction_status) << ")";
            std::cout << "\n";
            if (cand.root && cand.verdict != Verdict::NotThisClass) {
                print_root(std::cout, *cand.root);
                if (cand.criteria)
                    std::cout << "  criteria = (" << cand.criteria->first.to_string() << ", "
                              << cand.criteria->second.to_string() << ")\n";
                for (const auto& note : cand.branch_notes) std::cout << "  note: " << note << "\n";
            }
        }
        if (report.total_derivative_of)
            std::cout << "total derivative of: " << print_canonical(*report.total_derivative_of) << "\n";
        else
            std::cout << "not a total derivative (" << report.total_derivative_obstruction << ")\n";
        if (report.root_equation)
            std::cout << "root equation: " << print_canonical(*report.root_equation) << "\n";
        for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
    }
    return report.any_linearizable() ? kExitOk : kExitNegative;
}

RootCoefficients parse_root(const std::string& c, const std::string& g, const std::string& h,
                            const std::string& d, const std::vector<std::string>& params) {
    return RootCoefficients{parse_rational(c, params), parse_rational(g, params),
                            parse_rational(h, params), parse_rational(d, params)};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classifier for conditionally linearizable ODEs (orders 2-4)"};
    app.require_subcommand(1);
    // coefficient flags use --h, so help is long-form only
    app.set_help_flag("--help", "print help and exit");

    std::string params_csv;
    bool json = false;
    app.add_option("--params", params_csv, "comma-separated parameter symbols")->capture_default_str();
    app.add_flag("--json", json, "emit JSON reports");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify an equation against the catalog");
    classify_cmd->set_help_flag("--help", "print help and exit");
    classify_cmd->fallthrough(true);
    std::string expr, input_file, gauge_b, gauge_e;
    int gauge_bound = 2, steps = 1024;
    double tolerance = 1e-8;
    bool with_metric = false;
    classify_cmd->add_option("expression", expr, "equation text, e.g. \"y'' - 2*y'^2/y\"");
    classify_cmd->add_option("--input", input_file, "read the equation from a file (UTF-8, one equation)");
    classify_cmd->add_option("--gauge-b", gauge_b, "gauge override for b");
    classify_cmd->add_option("--gauge-e", gauge_e, "gauge override for e");
    classify_cmd->add_option("--gauge-bound", gauge_bound, "gauge search exponent bound")
        ->capture_default_str();
    classify_cmd->add_flag("--with-metric", with_metric, "numeric metric path-independence check");
    classify_cmd->add_option("--tolerance", tolerance, "numeric tolerance")->capture_default_str();
    classify_cmd->add_option("--steps", steps, "RK4 steps per unit length")->capture_default_str();

    // generate
    auto* generate_cmd = app.add_subcommand("generate", "build a class form from root coefficients");
    generate_cmd->set_help_flag("--help", "print help and exit");
    generate_cmd->fallthrough(true);
    std::string rc = "0", rg = "0", rh = "0", rd = "0", cls_name = "fourth21";
    generate_cmd->add_option("--c", rc, "root coefficient c")->capture_default_str();
    generate_cmd->add_option("--g", rg, "root coefficient g")->capture_default_str();
    generate_cmd->add_option("--h", rh, "root coefficient h")->capture_default_str();
    generate_cmd->add_option("--d", rd, "root coefficient d")->capture_default_str();
    generate_cmd->add_option("--class", cls_name, "target class (root8, third10, third14, fourth18, fourth21, fourth24, fourth30, fourth34)")
        ->capture_default_str();

    // criteria
    auto* criteria_cmd = app.add_subcommand("criteria", "evaluate the two linearizability residuals");
    criteria_cmd->set_help_flag("--help", "print help and exit");
    criteria_cmd->fallthrough(true);
    std::string cc = "0", cg = "0", ch = "0", cd = "0";
    criteria_cmd->add_option("--c", cc, "root coefficient c")->capture_default_str();
    criteria_cmd->add_option("--g", cg, "root coefficient g")->capture_default_str();
    criteria_cmd->add_option("--h", ch, "root coefficient h")->capture_default_str();
    criteria_cmd->add_option("--d", cd, "root coefficient d")->capture_default_str();

    // curvature
    auto* curvature_cmd = app.add_subcommand("curvature", "curvature of a six-coefficient system");
    curvature_cmd->set_help_flag("--help", "print help and exit");
    curvature_cmd->fallthrough(true);
    std::string ka = "0", kb = "0", kc = "0", kd = "0", ke = "0", kf = "0";
    curvature_cmd->add_option("--a", ka, "coefficient a")->capture_default_str();
    curvature_cmd->add_option("--b", kb, "coefficient b")->capture_default_str();
    curvature_cmd->add_option("--c", kc, "coefficient c")->capture_default_str();
    curvature_cmd->add_option("--d", kd, "coefficient d")->capture_default_str();
    curvature_cmd->add_option("--e", ke, "coefficient e")->capture_default_str();
    curvature_cmd->add_option("--f", kf, "coefficient f")->capture_default_str();

    // corpus
    auto* corpus_cmd = app.add_subcommand("corpus", "run the bundled example catalog");
    corpus_cmd->set_help_flag("--help", "print help and exit");
    corpus_cmd->fallthrough(true);
    bool dump_catalog = false;
    corpus_cmd->add_flag("--dump-catalog", dump_catalog, "print the catalog as JSON and exit");

    CLI11_PARSE(app, argc, argv);
    std::vector<std::string> params = split_params(params_csv);

    try {
        if (*classify_cmd) {
            std::string text = read_input(expr, input_file);
            if (text.empty()) {
                std::cerr << "error: no equation given\n";
                return kExitInputError;
            }
            return cmd_classify(text, params, json, gauge_b, gauge_e, gauge_bound, with_metric,
                                tolerance, steps);
        }
        if (*generate_cmd) {
            auto cls = class_from_name(cls_name);
            if (!cls) {
                std::cerr << "error: unknown class '" << cls_name << "'\n";
                return kExitInputError;
            }
            RootCoefficients root = parse_root(rc, rg, rh, rd, params);
            JetPolynomial jet = generate(root, *cls);
            if (json)
                std::cout << generated_to_json(root, *cls, jet);
            else
                std::cout << print_canonical(jet) << "\n";
            return kExitOk;
        }
        if (*criteria_cmd) {
            RootCoefficients root = parse_root(cc, cg, ch, cd, params);
            auto crit = tresse_criteria(root);
            bool zero = crit.first.is_zero() && crit.second.is_zero();
            if (json) {
                std::cout << criteria_to_json(root, crit);
            } else {
                std::cout << "criteria: (" << crit.first.to_string() << ", "
                          << crit.second.to_string() << ")\n";
                std::cout << "linearizable: " << (zero ? "true" : "false") << "\n";
            }
            return zero ? kExitOk : kExitNegative;
        }
        if (*curvature_cmd) {
            ChristoffelSet cs{parse_rational(ka, params), parse_rational(kb, params),
                              parse_rational(kc, params), parse_rational(kd, params),
                              parse_rational(ke, params), parse_rational(kf, params)};
            CurvatureComponents comps = curvature(cs);
            auto residuals = geodesic_conditions(cs);
            if (json) {
                std::cout << curvature_to_json(cs, comps, residuals);
            } else {
                std::cout << "R1_112 = " << comps.r1_112.to_string() << "\n";
                std::cout << "R1_212 = " << comps.r1_212.to_string() << "\n";
                std::cout << "R2_112 = " << comps.r2_112.to_string() << "\n";
                std::cout << "R2_212 = " << comps.r2_212.to_string() << "\n";
                std::cout << "flat: " << (comps.all_zero() ? "true" : "false") << "\n";
            }
            return comps.all_zero() ? kExitOk : kExitNegative;
        }
        if (*corpus_cmd) {
            if (dump_catalog) {
                std::cout << corpus_to_json();
                return kExitOk;
            }
            CorpusRunSummary summary = run_corpus();
            if (json) {
                std::cout << corpus_summary_to_json(summary);
            } else {
                for (const auto& r : summary.results) {
                    std::cout << "case " << r.id << ": " << (r.ok() ? "verified" : "FAILED");
                    if (!r.ok() && !r.detail.empty()) std::cout << " (" << r.detail << ")";
                    std::cout << "\n";
                }
                std::cout << (summary.results.size() - summary.failures) << "/"
                          << summary.results.size() << " verified\n";
                std::cout << "root equations:\n";
                for (const auto& eq : summary.shared_root_equations) std::cout << "  " << eq << "\n";
            }
            return std::min(summary.failures, 125);
        }
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DerivativeInDenominator& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const UnknownSymbol& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const UnsupportedOrder& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
