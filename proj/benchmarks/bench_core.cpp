/* Microbenchmarks for the exact-arithmetic hot paths: elimination,
 * ideal-sheaf cohomology, ledger construction, Plucker minors, and the
 * threshold scan. Inputs are fixed and seeded so runs are comparable. */

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "indgrass/extension_ledger.hpp"
#include "indgrass/quadric.hpp"
#include "indgrass/ratlinalg.hpp"
#include "indgrass/segre_curves.hpp"
#include "indgrass/twist_bound.hpp"

using namespace indgrass;

namespace {

ratlinalg::RatMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ratlinalg::RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const long long num = static_cast<long long>(rng() % 41) - 20;
            const long long den = static_cast<long long>(rng() % 7) + 1;
            m.at(i, j) = ratlinalg::Rational(num, den);
        }
    return m;
}

quadric::FiberPointSet fiber_points(std::size_t n) {
    std::vector<ratlinalg::Rational> group;
    for (std::size_t i = 0; i < n; ++i)
        group.emplace_back(static_cast<long long>(2 * i + 1),
                           static_cast<long long>(i % 5 + 1));
    return quadric::FiberPointSet({group});
}

void BM_Echelonize(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = random_matrix(n, n, 12345);
    for (auto _ : state) {
        auto work = m;
        benchmark::DoNotOptimize(ratlinalg::echelonize(work));
    }
}
BENCHMARK(BM_Echelonize)->Arg(8)->Arg(16)->Arg(32);

void BM_IntersectRows(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_matrix(n / 2, n, 7);
    const auto b = random_matrix(n / 2 + 1, n, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(ratlinalg::intersect_rows(a, b));
}
BENCHMARK(BM_IntersectRows)->Arg(12)->Arg(24);

void BM_IdealSheafCohomology(benchmark::State& state) {
    const auto z = fiber_points(static_cast<std::size_t>(state.range(0)));
    const quadric::BiDegree bd{2, 9};
    for (auto _ : state)
        benchmark::DoNotOptimize(quadric::h_ideal(z, bd));
}
BENCHMARK(BM_IdealSheafCohomology)->Arg(4)->Arg(8);

void BM_BuildLedger(benchmark::State& state) {
    const extension_ledger::Partition p({3, 2, 2, 1, 1, 1});
    const auto z = extension_ledger::random_fiber_points(p, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(extension_ledger::build_ledger(p, z));
}
BENCHMARK(BM_BuildLedger);

void BM_PluckerCurve(benchmark::State& state) {
    const auto r = static_cast<std::size_t>(state.range(0));
    const auto cfg = segre_curves::standard_config(r);
    std::vector<ratlinalg::Rational> t;
    for (std::size_t i = 0; i + 1 < r; ++i)
        t.emplace_back(static_cast<long long>(i + 2), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(segre_curves::plucker_curve(cfg, t));
}
BENCHMARK(BM_PluckerCurve)->Arg(2)->Arg(3)->Arg(4);

void BM_TrivialityThreshold(benchmark::State& state) {
    const twist_bound::IndGrassSpec spec{twist_bound::SequenceSpec::constant(2),
                                         twist_bound::SequenceSpec::constant(2), 2, 0};
    for (auto _ : state)
        benchmark::DoNotOptimize(twist_bound::triviality_threshold(spec, 16));
}
BENCHMARK(BM_TrivialityThreshold);

void BM_SchurDimension(benchmark::State& state) {
    const std::vector<long long> lambda{4, 3, 2, 2, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(twist_bound::schur_dimension(lambda, 9));
}
BENCHMARK(BM_SchurDimension);

} // namespace

BENCHMARK_MAIN();
