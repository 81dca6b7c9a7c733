// Microbenchmarks for the enumeration and integer-reduction kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "galcov/pipeline.hpp"

namespace {

galcov::PlanarDegeneration fixture(const std::string& name) {
    return galcov::load_case(std::string(GALCOV_DATA_DIR) + "/cases/" + name);
}

void BM_ToddCoxeterQuintic(benchmark::State& state) {
    auto d = fixture("fig8-quintic-5pt.case.json");
    auto gp = galcov::generate(d, true);
    auto q = galcov::squares_quotient(gp);
    for (auto _ : state) {
        auto t = galcov::todd_coxeter(q, {}, {100000});
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_ToddCoxeterQuintic);

void BM_TableFromHom(benchmark::State& state) {
    auto d = fixture("fig6-cayley-type-ii.case.json");
    auto gp = galcov::generate(d, true);
    auto q = galcov::squares_quotient(gp);
    for (auto _ : state) {
        auto t = galcov::table_from_hom(q, gp.image);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_TableFromHom);

void BM_KernelInvariants(benchmark::State& state) {
    auto d = fixture("fig6-cayley-type-ii.case.json");
    auto gp = galcov::generate(d, true);
    auto q = galcov::squares_quotient(gp);
    auto kd = galcov::reidemeister_schreier(q, galcov::table_from_hom(q, gp.image));
    for (auto _ : state) {
        auto inv = galcov::abelianization(kd.kernel);
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_KernelInvariants);

void BM_SmithNormalForm(benchmark::State& state) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dist(-9, 9);
    galcov::IntegerMatrix A(20, 20);
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) A.at(i, j) = dist(rng);
    for (auto _ : state) {
        auto snf = galcov::smith_normal_form(A);
        benchmark::DoNotOptimize(snf);
    }
}
BENCHMARK(BM_SmithNormalForm);

}  // namespace

BENCHMARK_MAIN();
