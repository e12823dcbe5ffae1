#include "dcvopt/pareto.hpp"
#include "dcvopt/problem_file.hpp"
#include "dcvopt/scenarios.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace dcvopt;
using namespace dcvopt::testing;

namespace {

DCProblem example(const char* name)
{
    return parse_problem(scenario_source(name)).problem;
}

// Minimal 1-D problem builder over C = [-1, 1] with K = D = orthants.
DCProblem simple(std::vector<const char*> f, std::vector<const char*> g, const char* h = "-1", const char* s = "0")
{
    auto coords = [](const std::vector<const char*>& cs) {
        std::vector<Polynomial> out;
        for (const char* c : cs)
            out.push_back(parse_polynomial(c, 1));
        return VectorMap(1, std::move(out));
    };
    const std::size_t y = f.size();
    return DCProblem{1,
                     y,
                     1,
                     coords(f),
                     coords(g),
                     coords({h}),
                     coords({s}),
                     BoxSet(V({-1}), V({1})),
                     PolyhedralCone::orthant(y),
                     PolyhedralCone::orthant(1),
                     RationalVector::zero(y),
                     V({0})};
}

} // namespace

TEST(WeakMin, ThreeOneIsFalsified)
{
    const DCProblem p = example("example-3-1");
    const auto v = check_eps_weak_local_min(p, NeighborhoodSpec{}, 101);
    ASSERT_EQ(v.status, MinimalityStatus::Falsified);
    EXPECT_EQ(*v.gap, (RationalVector{Q(-3, 16), Q(-1, 4)}));
    EXPECT_TRUE(cone_contains(p.K, -*v.gap, true));
    EXPECT_EQ(objective_gap(p, RationalVector{Q(1, 2)}), (RationalVector{Q(-3, 16), Q(-1, 4)}));
    // Any radius up to 1 finds a witness.
    for (const Rational r : {Q(1), Q(1, 8), Q(1, 64)})
        EXPECT_EQ(check_eps_weak_local_min(p, NeighborhoodSpec(r), 101).status, MinimalityStatus::Falsified);
}

TEST(WeakMin, FourOneIsCertified)
{
    const DCProblem p = example("example-4-1");
    const auto v = check_eps_weak_local_min(p, NeighborhoodSpec{}, 101);
    EXPECT_EQ(v.status, MinimalityStatus::CertifiedOnGrid);
    EXPECT_EQ(v.feasible_points, 101u);
    EXPECT_EQ(objective_gap(p, V({0})), V({0}));
    EXPECT_EQ(objective_gap(p, RationalVector{Q(1, 3)}), V({1}));
}

TEST(WeakMin, IdenticalMapsAreMinimal)
{
    DCProblem p = simple({"x^3 - x", "x"}, {"x^3 - x", "x"});
    p.eps = RationalVector{Q(1, 3), Q(0)};
    EXPECT_TRUE(check_eps_weak_local_min(p, NeighborhoodSpec{}, 51).certified());
}

TEST(WeakMin, InfeasiblePointsAreSkipped)
{
    // F - G = -x; improving side x > 0 is cut off by H - S = x <= 0.
    const DCProblem p = simple({"-x"}, {"0"}, "x", "0");
    EXPECT_TRUE(check_eps_weak_local_min(p, NeighborhoodSpec{}, 51).certified());
}

TEST(ProperMin, SquaresAreProper)
{
    const DCProblem p = simple({"x^2", "x^2"}, {"0", "0"});
    const auto v = check_eps_proper_local_min(p, NeighborhoodSpec{}, DilationFamily{}, 101);
    ASSERT_TRUE(v.certified());
    EXPECT_EQ(*v.shear, Q(1, 8));
    const auto half = check_eps_proper_local_min(p, NeighborhoodSpec{}, DilationFamily({Q(1, 2)}), 101);
    EXPECT_EQ(*half.shear, Q(1, 2));
}

TEST(ProperMin, ThreeOneIsNotCertified)
{
    const auto v = check_eps_proper_local_min(example("example-3-1"), NeighborhoodSpec{}, DilationFamily{}, 101);
    EXPECT_EQ(v.status, MinimalityStatus::NotCertified);
}

TEST(ProperMin, ShearedConeContainsQuadrantBoundary)
{
    for (const auto& m : DilationFamily{}.shears) {
        const PolyhedralCone k = sheared_cone(m);
        EXPECT_TRUE(cone_contains(k, V({1, 0}), true));
        EXPECT_TRUE(cone_contains(k, V({0, 1}), true));
    }
    EXPECT_THROW(DilationFamily({Q(1)}), PreconditionViolation);
    EXPECT_THROW(check_eps_proper_local_min(example("example-4-1"), NeighborhoodSpec{}, DilationFamily{}, 11),
                 PreconditionViolation);
}

TEST(ProperMin, ProperBeatsWeakOnSkewedGap)
{
    // Gap (x, -x/10) never lies in -int K; for x < 0 it lies in -int K'_m
    // exactly when m > 1/10.
    const DCProblem p = simple({"x", "-1/10*x"}, {"0", "0"});
    EXPECT_TRUE(check_eps_weak_local_min(p, NeighborhoodSpec{}, 21).certified());
    const auto v = check_eps_proper_local_min(p, NeighborhoodSpec{}, DilationFamily({Q(1, 2)}), 21);
    EXPECT_EQ(v.status, MinimalityStatus::NotCertified);
    const auto small = check_eps_proper_local_min(p, NeighborhoodSpec{}, DilationFamily({Q(1, 20)}), 21);
    EXPECT_TRUE(small.certified());
}

TEST(MinProperties, RandomCorpusRelations)
{
    std::mt19937 rng(51);
    for (int i = 0; i < 40; ++i) {
        auto term = [&](int deg) { return Monomial{{static_cast<unsigned>(deg)}, uniform(rng, -3, 3)}; };
        const VectorMap f(1, {Polynomial(1, {term(1), term(2)}), Polynomial(1, {term(1), term(2), term(3)})});
        DCProblem p = simple({"0", "0"}, {"0", "0"});
        p.F = f;
        p.eps = RationalVector{Q(uniform(rng, 0, 2), 8), Q(uniform(rng, 0, 2), 8)};
        const auto pts = neighborhood_grid(p, Q(1, 2), 21);
        const auto weak = check_eps_weak_local_min(p, pts);
        const auto proper = check_eps_proper_local_min(p, DilationFamily{}, pts);
        if (proper.certified())
            EXPECT_TRUE(weak.certified());
        if (weak.certified()) {
            // Larger eps keeps certification; smaller U keeps it.
            DCProblem q = p;
            q.eps += V({1, 0});
            EXPECT_TRUE(check_eps_weak_local_min(q, pts).certified());
            EXPECT_TRUE(check_eps_weak_local_min(p, neighborhood_grid(p, Q(1, 4), 11)).certified());
        } else {
            EXPECT_TRUE(cone_contains(p.K, -objective_gap(p, *weak.witness), true));
        }
    }
}
