// Serial reference vs OpenMP kernel, side by side.

#include "dal/conjecture.hpp"
#include "dal/distance.hpp"
#include "dal/labeling.hpp"
#include "dal/search.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

using namespace dal;

namespace {

auto shuffled_labels(int v) -> Labeling
{
    std::vector<int> labels(v);
    std::iota(labels.begin(), labels.end(), 1);
    std::mt19937 rng(1);
    std::shuffle(labels.begin(), labels.end(), rng);
    return Labeling(std::move(labels));
}

auto catalog_text() -> const std::string &
{
    static const std::string text = [] {
        std::ifstream in(std::string(DAL_BENCH_DATA) + "/graphs_order_le7.g6");
        std::ostringstream out;
        out << in.rdbuf();
        return out.str();
    }();
    return text;
}

void distance_serial(benchmark::State & state)
{
    auto g = prism(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(distance_matrix_serial(g));
}

void distance_parallel(benchmark::State & state)
{
    auto g = prism(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(distance_matrix(g));
}

void weights_serial(benchmark::State & state)
{
    auto g = sun(static_cast<int>(state.range(0)));
    DNeighborhoods hoods(g, {1, 2, 3});
    auto f = shuffled_labels(g.order());
    for (auto _ : state)
        benchmark::DoNotOptimize(weight_profile_serial(hoods, f, {1, 2, 3}));
}

void weights_parallel(benchmark::State & state)
{
    auto g = sun(static_cast<int>(state.range(0)));
    DNeighborhoods hoods(g, {1, 2, 3});
    auto f = shuffled_labels(g.order());
    for (auto _ : state)
        benchmark::DoNotOptimize(weight_profile(hoods, f, {1, 2, 3}));
}

void enumerate_serial_k(benchmark::State & state)
{
    auto g = wheel(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_serial(g, TargetSpec::any_antimagic()));
}

void enumerate_parallel_k(benchmark::State & state)
{
    auto g = wheel(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate(g, TargetSpec::any_antimagic()));
}

void search_workers(benchmark::State & state)
{
    SearchOptions options;
    options.workers = static_cast<int>(state.range(0));
    options.budget = Budget::unlimited();
    auto g = prism(6);
    auto target = TargetSpec::progression(8, 1);
    options.pruning.sum_window = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(search(g, target, options));
}

void scan_workers(benchmark::State & state)
{
    ScanOptions options;
    options.workers = static_cast<int>(state.range(0));
    options.policy = DPolicy::subsets_up_to(2);
    for (auto _ : state) {
        std::istringstream in(catalog_text());
        benchmark::DoNotOptimize(scan(in, options));
    }
}

const int threads = std::max(2, omp_get_max_threads());

} // namespace

BENCHMARK(distance_serial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(distance_parallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(weights_serial)->Arg(1024)->Arg(8192)->Unit(benchmark::kMicrosecond);
BENCHMARK(weights_parallel)->Arg(1024)->Arg(8192)->Unit(benchmark::kMicrosecond);
BENCHMARK(enumerate_serial_k)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(enumerate_parallel_k)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(search_workers)->Arg(1)->Arg(threads)->Unit(benchmark::kMillisecond);
BENCHMARK(scan_workers)->Arg(1)->Arg(threads)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
