#include <benchmark/benchmark.h>

#include "ncat/axioms.hpp"
#include "ncat/cat_w.hpp"
#include "ncat/kernels.hpp"

namespace {

ncat::CellsByLevel<ncat::WCell> cells_w(std::size_t n, std::uint32_t bound) {
    ncat::CellsByLevel<ncat::WCell> cells;
    for (std::size_t l = 0; l <= n; ++l) cells.push_back(ncat::w_enumerate(l, bound));
    return cells;
}

void run_axioms(benchmark::State& state, ncat::Execution exec) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto bound = static_cast<std::uint32_t>(state.range(1));
    const ncat::WCategory w(n);
    const auto cells = cells_w(n, bound);
    ncat::AxiomOptions opt;
    opt.exec = exec;
    for (auto _ : state) {
        auto report = ncat::check_axioms(w, cells, opt);
        benchmark::DoNotOptimize(report);
    }
}

void BM_axioms_serial(benchmark::State& s) { run_axioms(s, ncat::Execution::serial); }
void BM_axioms_parallel(benchmark::State& s) { run_axioms(s, ncat::Execution::parallel); }

void run_tally(benchmark::State& state, ncat::Execution exec) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto t = ncat::tally(exec, n, [](std::size_t i) { return (i * 2654435761u) % 97 == 0; });
        benchmark::DoNotOptimize(t);
    }
}

void BM_tally_serial(benchmark::State& s) { run_tally(s, ncat::Execution::serial); }
void BM_tally_parallel(benchmark::State& s) { run_tally(s, ncat::Execution::parallel); }

}  // namespace

BENCHMARK(BM_axioms_serial)->Args({3, 3})->Args({4, 4})->Args({4, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_axioms_parallel)->Args({3, 3})->Args({4, 4})->Args({4, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tally_serial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_tally_parallel)->Arg(1 << 16)->Arg(1 << 20);

BENCHMARK_MAIN();
