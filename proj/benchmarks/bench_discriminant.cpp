#include <benchmark/benchmark.h>

#include <sparsedisc/closed_form.hpp>
#include <sparsedisc/instance_gen.hpp>

using namespace sparsedisc;

namespace {

QuadrinomialSpec k2_spec(long n) {
    return QuadrinomialSpec{Family::K2, BigInt(n), BigInt(0), GaussianRational(3),
                            GaussianRational(5), GaussianRational(7)};
}

void BM_K2ClosedForm(benchmark::State& state) {
    const auto spec = k2_spec(state.range(0));
    for (auto _ : state) {
        auto r = disc_quad_k2(spec);
        benchmark::DoNotOptimize(r.value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_K2ClosedForm)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_K2Oracle(benchmark::State& state) {
    const Polynomial f = expand(k2_spec(state.range(0)));
    for (auto _ : state) {
        auto r = discriminant_oracle(f);
        benchmark::DoNotOptimize(r.value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_K2Oracle)->RangeMultiplier(2)->Range(16, 128)->Complexity()->Unit(benchmark::kMillisecond);

void BM_K3ClosedForm(benchmark::State& state) {
    const QuadrinomialSpec spec{Family::K3, BigInt(state.range(0)), BigInt(0), GaussianRational(2),
                                GaussianRational(-3), GaussianRational(5)};
    for (auto _ : state) {
        auto r = disc_quad_k3(spec);
        benchmark::DoNotOptimize(r.value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_K3ClosedForm)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_ResultantSylvester(benchmark::State& state) {
    InstanceGenerator rng(7);
    const Polynomial f = expand(k2_spec(state.range(0)));
    const Polynomial g = f.derivative();
    for (auto _ : state) {
        auto r = resultant_sylvester(f, g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ResultantSylvester)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ResultantPrs(benchmark::State& state) {
    const Polynomial f = expand(k2_spec(state.range(0)));
    const Polynomial g = f.derivative();
    for (auto _ : state) {
        auto r = resultant_prs(f, g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ResultantPrs)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
