#include "odelin/corpus.hpp"
#include "odelin/geometry.hpp"
#include "odelin/parse.hpp"

#include <benchmark/benchmark.h>

using namespace odelin;

namespace {

RationalFunction rf(const std::string& text, const std::vector<std::string>& params = {}) {
    return parse_rational(text, params);
}

RootCoefficients polar_root() { return {rf("x"), rf("0"), rf("2/x"), rf("0")}; }

RootCoefficients mixed_root() { return {rf("-x/y^2"), rf("1/y"), rf("2/x"), rf("0")}; }

void BM_PolynomialGcd(benchmark::State& state) {
    Polynomial a = rf("x^2 - y^2").numerator() * rf("x^3 + y").numerator();
    Polynomial b = rf("x - y").numerator() * rf("x^3 + y").numerator();
    for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolynomialGcd);

void BM_GenerateSeventhDegree(benchmark::State& state) {
    RootCoefficients root = mixed_root();
    for (auto _ : state) benchmark::DoNotOptimize(generate(root, FormClass::Fourth21));
}
BENCHMARK(BM_GenerateSeventhDegree);

void BM_TresseCriteria(benchmark::State& state) {
    RootCoefficients root = mixed_root();
    for (auto _ : state) benchmark::DoNotOptimize(tresse_criteria(root));
}
BENCHMARK(BM_TresseCriteria);

void BM_ExtractSeventhDegree(benchmark::State& state) {
    JetPolynomial f = generate(mixed_root(), FormClass::Fourth21);
    for (auto _ : state) benchmark::DoNotOptimize(extract(f, FormClass::Fourth21));
}
BENCHMARK(BM_ExtractSeventhDegree);

void BM_ClassifyCatalogCase(benchmark::State& state) {
    JetPolynomial f = generate(mixed_root(), FormClass::Fourth30);
    for (auto _ : state) benchmark::DoNotOptimize(classify(f));
}
BENCHMARK(BM_ClassifyCatalogCase);

void BM_Curvature(benchmark::State& state) {
    ChristoffelSet cs = complete(polar_root(), {rf("0"), rf("-1/x")});
    for (auto _ : state) benchmark::DoNotOptimize(curvature(cs));
}
BENCHMARK(BM_Curvature);

void BM_MetricRk4(benchmark::State& state) {
    ChristoffelSet cs = complete(polar_root(), {rf("0"), rf("-1/x")});
    for (auto _ : state)
        benchmark::DoNotOptimize(metric_integrate(cs, {1, 1}, {1, 0, 1}, {{2, 1}}, 256));
}
BENCHMARK(BM_MetricRk4);

void BM_ParsePrintRoundTrip(benchmark::State& state) {
    std::string text = print_canonical(generate(mixed_root(), FormClass::Fourth30));
    for (auto _ : state) benchmark::DoNotOptimize(print_canonical(parse(text, {})));
}
BENCHMARK(BM_ParsePrintRoundTrip);

} // namespace

BENCHMARK_MAIN();
