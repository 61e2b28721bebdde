// Serial reference kernels against their OpenMP counterparts.
#include <map>

#include <benchmark/benchmark.h>

#include "tuttekit/finite_field.hpp"
#include "tuttekit/root_systems.hpp"
#include "tuttekit/signed_graph.hpp"
#include "tuttekit/tutte.hpp"

using namespace tuttekit;

namespace {

const VectorConfig &config(Family f, unsigned n, LatticeKind l) {
    static std::map<std::string, VectorConfig> cache;
    const RootSystemSpec spec{f, n, l};
    auto it = cache.find(spec.to_string());
    if (it == cache.end()) {
        it = cache.emplace(spec.to_string(), build_config(spec)).first;
    }
    return it->second;
}

void BM_TutteSerial(benchmark::State &st) {
    const auto &cfg = config(Family::C, static_cast<unsigned>(st.range(0)), LatticeKind::Integer);
    for (auto _ : st) {
        benchmark::DoNotOptimize(reference::subset_census(cfg, Flavor::Arithmetic));
    }
}
void BM_TutteParallel(benchmark::State &st) {
    const auto &cfg = config(Family::C, static_cast<unsigned>(st.range(0)), LatticeKind::Integer);
    for (auto _ : st) {
        benchmark::DoNotOptimize(subset_census(cfg, Flavor::Arithmetic));
    }
}
BENCHMARK(BM_TutteSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TutteParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_TorusSerial(benchmark::State &st) {
    const auto &cfg = config(Family::B, 3, LatticeKind::Weight);
    const auto p = static_cast<std::uint64_t>(st.range(0));
    for (auto _ : st) {
        benchmark::DoNotOptimize(reference::torus_profile(cfg, p));
    }
}
void BM_TorusParallel(benchmark::State &st) {
    const auto &cfg = config(Family::B, 3, LatticeKind::Weight);
    const auto p = static_cast<std::uint64_t>(st.range(0));
    for (auto _ : st) {
        benchmark::DoNotOptimize(torus_profile(cfg, p));
    }
}
BENCHMARK(BM_TorusSerial)->Arg(13)->Arg(41)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorusParallel)->Arg(13)->Arg(41)->Unit(benchmark::kMillisecond);

void BM_CensusSerial(benchmark::State &st) {
    for (auto _ : st) {
        benchmark::DoNotOptimize(reference::master_census(static_cast<unsigned>(st.range(0))));
    }
}
void BM_CensusParallel(benchmark::State &st) {
    for (auto _ : st) {
        benchmark::DoNotOptimize(master_census(static_cast<unsigned>(st.range(0))));
    }
}
BENCHMARK(BM_CensusSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DictionarySerial(benchmark::State &st) {
    for (auto _ : st) {
        benchmark::DoNotOptimize(
            reference::graph_dictionary_tutte(Family::B, static_cast<unsigned>(st.range(0)), LatticeKind::Weight));
    }
}
void BM_DictionaryParallel(benchmark::State &st) {
    for (auto _ : st) {
        benchmark::DoNotOptimize(
            graph_dictionary_tutte(Family::B, static_cast<unsigned>(st.range(0)), LatticeKind::Weight));
    }
}
BENCHMARK(BM_DictionarySerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DictionaryParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
