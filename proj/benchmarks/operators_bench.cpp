#include <benchmark/benchmark.h>

#include "cyclicsum/operators.hpp"
#include "cyclicsum/tensor.hpp"

namespace {

void BM_RhoSpanBasis(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(csf::rho_n_span_basis(n, k));
}
BENCHMARK(BM_RhoSpanBasis)->Args({0, 8})->Args({0, 11})->Args({3, 9})->Unit(benchmark::kMillisecond);

// Direct formula against the Leibniz-rule tensor pipeline on the same word.
void BM_RhoDirect(benchmark::State& state) {
    const auto w = csf::ExtendedWord::from_string("xzyxyzxy");
    for (auto _ : state) benchmark::DoNotOptimize(csf::rho_n_direct(static_cast<std::size_t>(state.range(0)), w));
}
BENCHMARK(BM_RhoDirect)->Arg(0)->Arg(2);

void BM_RhoTensor(benchmark::State& state) {
    const auto w = csf::ExtendedWord::from_string("xzyxyzxy");
    for (auto _ : state) benchmark::DoNotOptimize(csf::m_n(csf::c_n(static_cast<std::size_t>(state.range(0)), w)));
}
BENCHMARK(BM_RhoTensor)->Arg(0)->Arg(2);

} // namespace
