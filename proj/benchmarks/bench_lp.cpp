#include <dcvopt/lp.hpp>

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

using namespace dcvopt;

namespace {

// sum_j v_j >= 1, v_j >= 0, with n free unknowns and a strict row on the last one.
LinearFeasibilityProblem simplex_system(std::size_t n, bool strict)
{
    std::vector<std::string> names;
    for (std::size_t j = 0; j < n; ++j)
        names.push_back("v" + std::to_string(j));
    LinearFeasibilityProblem lfp(names);
    RationalVector ones(n);
    for (std::size_t j = 0; j < n; ++j) {
        ones[j] = 1;
        RationalVector e(n);
        e[j] = 1;
        lfp.add(e, Relation::GreaterEqual, 0);
    }
    lfp.add(ones, Relation::GreaterEqual, 1);
    RationalVector last(n);
    last[n - 1] = Rational(1, 3);
    lfp.add(last, strict ? Relation::Greater : Relation::GreaterEqual, Rational(1, 7));
    return lfp;
}

// v >= 1 and -v >= 0.
LinearFeasibilityProblem infeasible_system(std::size_t n)
{
    auto lfp = simplex_system(n, false);
    RationalVector neg(n);
    for (std::size_t j = 0; j < n; ++j)
        neg[j] = -1;
    lfp.add(neg, Relation::GreaterEqual, 0);
    return lfp;
}

} // namespace

static void BM_FeasibleSystem(benchmark::State& state)
{
    const auto lfp = simplex_system(static_cast<std::size_t>(state.range(0)), false);
    for (auto _ : state) {
        auto r = solve_feasibility(lfp);
        benchmark::DoNotOptimize(r.feasible);
    }
}
BENCHMARK(BM_FeasibleSystem)->DenseRange(2, 8, 2);

static void BM_StrictSystem(benchmark::State& state)
{
    const auto lfp = simplex_system(static_cast<std::size_t>(state.range(0)), true);
    for (auto _ : state) {
        auto r = solve_feasibility(lfp);
        benchmark::DoNotOptimize(r.strict_margin);
    }
}
BENCHMARK(BM_StrictSystem)->DenseRange(2, 8, 2);

static void BM_FarkasCertificate(benchmark::State& state)
{
    const auto lfp = infeasible_system(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto r = solve_feasibility(lfp);
        benchmark::DoNotOptimize(r.farkas);
    }
}
BENCHMARK(BM_FarkasCertificate)->DenseRange(2, 8, 2);
