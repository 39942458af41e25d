#include <benchmark/benchmark.h>

#include "octorank/exterior.hpp"
#include "octorank/forms.hpp"

using namespace octorank;

namespace {

ExactMatrix random_matrix(const FieldSpec& f, std::size_t n, Rng& rng) {
    ExactMatrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = f.random_element(rng);
    return m;
}

void BM_Rank7x7_F5(benchmark::State& state) {
    const FieldSpec f5 = FieldSpec::prime_field(5);
    Rng rng(1);
    const ExactMatrix m = random_matrix(f5, 7, rng);
    for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_Rank7x7_F5);

void BM_Rank7x7_Q(benchmark::State& state) {
    const FieldSpec q = FieldSpec::rationals();
    Rng rng(2);
    const ExactMatrix m = random_matrix(q, 7, rng);
    for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_Rank7x7_Q);

void BM_OctonionProduct_F5(benchmark::State& state) {
    const auto alg = OctonionAlgebra::build(FieldSpec::prime_field(5),
                                            AlgebraDescriptor::split_zorn());
    Rng rng(3);
    const Octonion x = alg->random_element(rng);
    const Octonion y = alg->random_element(rng);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_OctonionProduct_F5);

void BM_OctonionProduct_Q(benchmark::State& state) {
    const auto alg = OctonionAlgebra::build(FieldSpec::rationals(),
                                            AlgebraDescriptor::division_fano());
    Rng rng(4);
    const Octonion x = alg->random_element(rng);
    const Octonion y = alg->random_element(rng);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_OctonionProduct_Q);

void BM_CensusPoint_F5(benchmark::State& state) {
    // One census step: combine the seven generators and take the rank.
    const auto alg = OctonionAlgebra::build(FieldSpec::prime_field(5),
                                            AlgebraDescriptor::split_zorn());
    const FormFamily family = FormFamily::build(alg, SpaceTag::OnC0);
    Rng rng(5);
    std::vector<FieldElement> coeffs;
    for (int g = 0; g < 7; ++g) coeffs.push_back(alg->field().random_element(rng));
    for (auto _ : state) {
        const AltForm f = family.combination(coeffs);
        benchmark::DoNotOptimize(f.rank());
    }
}
BENCHMARK(BM_CensusPoint_F5);

void BM_EvaluationMapBuild_Q(benchmark::State& state) {
    const auto alg = OctonionAlgebra::build(FieldSpec::rationals(),
                                            AlgebraDescriptor::division_fano());
    const FormFamily family = FormFamily::build(alg, SpaceTag::OnC0);
    for (auto _ : state) benchmark::DoNotOptimize(FormEvaluationMap::build(family));
}
BENCHMARK(BM_EvaluationMapBuild_Q);

}  // namespace

BENCHMARK_MAIN();
