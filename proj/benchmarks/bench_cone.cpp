#include <dcvopt/cone.hpp>

#include <benchmark/benchmark.h>

#include <vector>

using namespace dcvopt;

namespace {

// Pyramid over a regular-ish polygon in Q^3 with k apex edges.
std::vector<RationalVector> pyramid(int k)
{
    std::vector<RationalVector> rays;
    for (int i = 0; i < k; ++i) {
        const int a = (i % 4 < 2) ? 1 : -1;
        const int b = ((i + 1) % 4 < 2) ? 1 : -1;
        rays.push_back(RationalVector{Rational(a * (i + 1), k), Rational(b * (k - i), k), 1});
    }
    return rays;
}

} // namespace

static void BM_ConeFromGenerators(benchmark::State& state)
{
    const auto rays = pyramid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        PolyhedralCone cone(rays);
        benchmark::DoNotOptimize(cone.halfspaces().size());
    }
}
BENCHMARK(BM_ConeFromGenerators)->Arg(4)->Arg(8)->Arg(16);

static void BM_ExtremeRaysOrthant(benchmark::State& state)
{
    const auto dim = static_cast<std::size_t>(state.range(0));
    std::vector<RationalVector> normals;
    for (std::size_t j = 0; j < dim; ++j) {
        RationalVector e(dim);
        e[j] = 1;
        normals.push_back(e);
    }
    for (auto _ : state) {
        auto rays = extreme_rays(normals, dim);
        benchmark::DoNotOptimize(rays.size());
    }
}
BENCHMARK(BM_ExtremeRaysOrthant)->DenseRange(1, 4);

static void BM_DualCone(benchmark::State& state)
{
    const PolyhedralCone cone(pyramid(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto dual = dual_cone(cone);
        benchmark::DoNotOptimize(dual.generators().size());
    }
}
BENCHMARK(BM_DualCone)->Arg(4)->Arg(8)->Arg(16);

static void BM_StrictMembership(benchmark::State& state)
{
    const PolyhedralCone cone(pyramid(8));
    const RationalVector v{Rational(1, 5), Rational(-1, 9), 3};
    for (auto _ : state)
        benchmark::DoNotOptimize(cone_contains(cone, v, true));
}
BENCHMARK(BM_StrictMembership);
