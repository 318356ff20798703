// Serial reference against the OpenMP kernels on published codes.

#include <benchmark/benchmark.h>

#include "lcpqc/distance.hpp"
#include "lcpqc/repro.hpp"

using namespace lcpqc;

namespace {

GenMatrix code_of(const std::string& id, bool d) {
    const ReproCase* rc = find_repro_case(id);
    const Field f = parse_field(rc->q, rc->modulus);
    const Elem lambda = elem_parse(rc->lambda, f).value();
    std::vector<std::string> notes;
    return row_basis(generator_matrix(prepare_standard_form(parse_spec(f, rc->m, lambda, d ? rc->d : rc->c), "C", notes)));
}

constexpr std::uint64_t kBudget = 1'000'000'000'000ULL;

// ex1 C: [16, 8]_5, 390625 messages.
void BM_EnumerateReference(benchmark::State& st) {
    const GenMatrix g = code_of("ex1", false);
    for (auto _ : st) benchmark::DoNotOptimize(reference::enumerate(g));
}
BENCHMARK(BM_EnumerateReference)->Unit(benchmark::kMillisecond);

void BM_EnumerateKernel(benchmark::State& st) {
    const GenMatrix g = code_of("ex1", false);
    const int threads = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::enumerate(g, kBudget, threads));
}
BENCHMARK(BM_EnumerateKernel)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

// qt2 C: [20, 10]_9 with d = 8; the search runs on its 10 x 20 dual.
void BM_ColumnSearchReference(benchmark::State& st) {
    const GenMatrix h = dual_matrix(code_of("qt2", false));
    for (auto _ : st) benchmark::DoNotOptimize(reference::column_search(h));
}
BENCHMARK(BM_ColumnSearchReference)->Unit(benchmark::kMillisecond);

void BM_ColumnSearchKernel(benchmark::State& st) {
    const GenMatrix h = dual_matrix(code_of("qt2", false));
    const int threads = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::column_search(h, kBudget, threads));
}
BENCHMARK(BM_ColumnSearchKernel)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
