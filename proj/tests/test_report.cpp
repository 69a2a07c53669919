#include "odelin/report.hpp"

#include "odelin/parse.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace odelin;
using odelin::testing::rf;

TEST_CASE("classification report JSON round trips byte-identically") {
    std::vector<std::string> kl{"k", "l"};
    std::string text = "y'' - 2*y'^2/y + k*y'/2 + l*y";
    ClassificationReport report = classify(parse(text, kl));
    std::string json = report_to_json(report, text);
    CHECK(rewrite_json(json) == json);
    CHECK(json.find("\"input\"") != std::string::npos);
    CHECK(json.find("\"normalized\"") != std::string::npos);
    CHECK(json.find("\"candidates\"") != std::string::npos);
    CHECK(json.find("\"root_equation\"") != std::string::npos);
    CHECK(json.find("\"verdict\": \"linearizable\"") != std::string::npos);
}

TEST_CASE("criteria and curvature JSON round trip") {
    RootCoefficients root{rf("0"), rf("0"), rf("0"), rf("y^3")};
    std::string cj = criteria_to_json(root, tresse_criteria(root));
    CHECK(rewrite_json(cj) == cj);
    CHECK(cj.find("-18*y") != std::string::npos);
    CHECK(cj.find("\"linearizable\": false") != std::string::npos);

    ChristoffelSet cs = complete(RootCoefficients{rf("x"), rf("0"), rf("2/x"), rf("0")},
                                 {rf("0"), rf("-1/x")});
    std::string kj = curvature_to_json(cs, curvature(cs), geodesic_conditions(cs));
    CHECK(rewrite_json(kj) == kj);
    CHECK(kj.find("\"flat\": true") != std::string::npos);
}

TEST_CASE("generated-form JSON carries the named coefficient map") {
    RootCoefficients polar{rf("x"), rf("0"), rf("2/x"), rf("0")};
    JetPolynomial jet = generate(polar, FormClass::Fourth21);
    std::string gj = generated_to_json(polar, FormClass::Fourth21, jet);
    CHECK(rewrite_json(gj) == gj);
    CHECK(gj.find("\"P7\": \"15*x^3\"") != std::string::npos);

    std::string sj = corpus_summary_to_json(run_corpus());
    CHECK(rewrite_json(sj) == sj);
    CHECK(sj.find("\"verified\": \"12/12\"") != std::string::npos);
}
