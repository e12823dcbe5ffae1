#include "dcvopt/scenarios.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace dcvopt;
using namespace dcvopt::testing;

namespace {

// F(l x1 + (1-l) x2) <=_K l F(x1) + (1-l) F(x2), evaluated directly.
bool convexity_holds(const VectorMap& f, const PolyhedralCone& k, const ConvexityWitness& w)
{
    const RationalVector mid = w.lambda * w.x1 + (1 - w.lambda) * w.x2;
    const RationalVector rhs = w.lambda * evaluate(f, w.x1) + (1 - w.lambda) * evaluate(f, w.x2);
    return cone_contains(k, rhs - evaluate(f, mid));
}

std::vector<std::string> checks(const Report& r)
{
    std::vector<std::string> out;
    for (const auto& e : r.results)
        out.push_back(e.check + ": " + e.status);
    return out;
}

} // namespace

TEST(Scenarios, Names)
{
    EXPECT_EQ(scenario_names(), (std::vector<std::string>{"example-3-1", "example-4-1"}));
    EXPECT_THROW(run_scenario("example-9-9"), Error);
    EXPECT_THROW(scenario_source("nope"), Error);
}

TEST(Scenarios, ThreeOneOutcome)
{
    const ScenarioResult s = run_scenario("example-3-1");
    const DCProblem& p = s.file.problem;
    EXPECT_EQ(checks(s.report), (std::vector<std::string>{
                                    "omega: CertifiedOnGrid",
                                    "convexity F: NotFalsified",
                                    "convexity G: NotFalsified",
                                    "convexity H: NotFalsified",
                                    "convexity S: NotFalsified",
                                    "dissipativity dG: NotFalsified",
                                    "dissipativity dS: NotFalsified",
                                    "legacy sufficient: CertifiedOnGrid",
                                    "weak-min: Falsified",
                                    "corrected sufficient: FailedFor",
                                }));
    EXPECT_TRUE(s.omega.equals_c());
    EXPECT_EQ(s.omega.feasible_points, 101u);

    const auto& cert = *s.legacy_sufficient->cases.front().certificate;
    EXPECT_EQ(cert.ystar, V({1, 0}));
    EXPECT_EQ(cert.zstar, V({0, 0}));
    EXPECT_TRUE(cert.reverify());

    ASSERT_EQ(s.weak_min.status, MinimalityStatus::Falsified);
    const RationalVector w = *s.weak_min.witness;
    EXPECT_LE(abs(w[0]), Q(1, 2));
    EXPECT_TRUE(feasible_contains(p, w));
    const RationalVector gap = evaluate(p.F, w) - evaluate(p.G, w) - evaluate(p.F, p.xbar) + evaluate(p.G, p.xbar) + p.eps;
    EXPECT_EQ(gap, *s.weak_min.gap);
    EXPECT_TRUE(cone_contains(p.K, -gap, true));
    EXPECT_FALSE(s.report.find("weak-min")->flags.empty());

    ASSERT_TRUE(s.corrected_sufficient->failed_for);
    EXPECT_EQ(s.corrected_sufficient->failed_for->correction->alpha(), V({1, 1}));
}

TEST(Scenarios, FourOneOutcome)
{
    const ScenarioResult s = run_scenario("example-4-1");
    const DCProblem& p = s.file.problem;
    EXPECT_EQ(checks(s.report), (std::vector<std::string>{
                                    "omega: CertifiedOnGrid",
                                    "convexity F: Falsified",
                                    "convexlike F: NotFalsified",
                                    "convexity G: Falsified",
                                    "convexlike G: NotFalsified",
                                    "convexity H: NotFalsified",
                                    "convexity S: NotFalsified",
                                    "subdiff G: Falsified",
                                    "weak-min: CertifiedOnGrid",
                                    "legacy necessary: InfeasibleOnGrid",
                                    "corrected necessary: MultipliersFound",
                                }));

    for (const auto& c : s.convexity) {
        if (c.convexlike || !c.verdict.falsified)
            continue;
        const auto& w = *c.verdict.witness;
        EXPECT_EQ(w.x1, V({-1}));
        EXPECT_EQ(w.x2, V({1}));
        EXPECT_EQ(w.lambda, Q(1, 2));
        const VectorMap& f = c.map == "F" ? p.F : p.G;
        EXPECT_FALSE(convexity_holds(f, p.K, w)) << c.map;
    }
    const auto* flagged = s.report.find("convexity F");
    ASSERT_FALSE(flagged->flags.empty());
    EXPECT_NE(flagged->flags[0].find("(-1, 1, 1/2)"), std::string::npos);

    const auto& [claim, dg] = s.subdifferentials.front();
    ASSERT_EQ(dg.status, SubdiffStatus::Falsified);
    EXPECT_FALSE(cone_contains(p.K, evaluate(p.G, *dg.witness) - evaluate(p.G, p.xbar)));

    EXPECT_FALSE(s.legacy_necessary->found);
    EXPECT_NE(s.legacy_necessary->trace.front().find("z* = 0"), std::string::npos);
    const auto& cert = *s.corrected_necessary->certificate;
    EXPECT_EQ(cert.ystar, V({0}));
    EXPECT_EQ(cert.zstar, V({1}));
    EXPECT_TRUE(cert.reverify());
    const auto* entry = s.report.find("corrected necessary");
    EXPECT_EQ(std::get<std::string>(entry->field("reverified")->value), "true");
}

TEST(Scenarios, OverridesApply)
{
    const ScenarioResult coarse = run_scenario("example-3-1", ScenarioOverrides{11, Q(1, 4)});
    EXPECT_EQ(coarse.omega.grid_points, 11u);
    EXPECT_EQ(coarse.file.options.radius, Q(1, 4));
    ASSERT_EQ(coarse.weak_min.status, MinimalityStatus::Falsified);
    EXPECT_LE(abs((*coarse.weak_min.witness)[0]), Q(1, 4));
}

TEST(Scenarios, OmegaDetectsInfeasiblePoints)
{
    DCProblem p = run_scenario("example-4-1").file.problem;
    p.S = p.H.plus_affine(parse_matrix("0"), V({-1}));
    const auto omega = check_omega(p, 5);
    EXPECT_FALSE(omega.equals_c());
    EXPECT_EQ(omega.feasible_points, 0u);
    EXPECT_EQ(*omega.first_infeasible, V({-1}));
}
