#include "dcvopt/dissipativity.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace dcvopt;
using namespace dcvopt::testing;

namespace {

OperatorField gradient_of_g()
{
    // x -> {(2x, 4x)} as a 2 x 1 operator.
    return OperatorField(2, 1, {{parse_polynomial("2*x", 1), parse_polynomial("4*x", 1)}});
}

// M(0) = {1}, M(x) = {0} elsewhere.
OperatorField jump_field()
{
    return OperatorField(1, 1, {{parse_polynomial("0", 1)}}, {OperatorField::Override{V({0}), {parse_matrix("1")}}});
}

} // namespace

TEST(Dissipativity, GradientFieldOfG)
{
    const auto v = check_approx_pseudo_dissipative(gradient_of_g(), V({0}), PolyhedralCone::orthant(2));
    EXPECT_FALSE(v.falsified);
    ASSERT_EQ(v.traces.size(), 5u);
    // Hand bound: |x| <= min(eps1/2, eps2/4) suffices, so eps = (1,1) needs r <= 1/4.
    EXPECT_EQ(v.traces[0].eps, V({1, 1}));
    EXPECT_EQ(*v.traces[0].accepted_radius, Q(1, 4));
    for (const auto& t : v.traces)
        EXPECT_LE(*t.accepted_radius, t.eps[1] / 4);
}

TEST(Dissipativity, ConstantFieldAcceptsLargestRadius)
{
    const auto v =
        check_approx_pseudo_dissipative(OperatorField::constant(parse_matrix("1; 0")), V({0}), PolyhedralCone::orthant(2));
    EXPECT_FALSE(v.falsified);
    for (const auto& t : v.traces)
        EXPECT_EQ(*t.accepted_radius, 1);
}

TEST(Dissipativity, JumpFieldIsFalsified)
{
    DissipativityOptions o;
    o.eps_samples = {RationalVector{Q(1, 2)}};
    const auto v = check_approx_pseudo_dissipative(jump_field(), V({0}), PolyhedralCone::orthant(1), o);
    ASSERT_TRUE(v.falsified);
    EXPECT_EQ(*v.failing_eps, RationalVector{Q(1, 2)});
    ASSERT_TRUE(v.witness);
    EXPECT_LT((*v.witness)[0], 0);
    // Re-check the inequality at the witness: eps*|x| - (T - T*)x must leave K.
    const Rational x = (*v.witness)[0];
    EXPECT_LT(Q(1, 2) * abs(x) - (0 - 1) * x, 0);
    EXPECT_EQ(v.traces[0].attempts.size(), default_radii().size());
}

TEST(Dissipativity, RejectsBadSamples)
{
    DissipativityOptions o;
    o.eps_samples = {V({1, 0})};
    EXPECT_THROW(check_approx_pseudo_dissipative(gradient_of_g(), V({0}), PolyhedralCone::orthant(2), o),
                 PreconditionViolation);
    DissipativityOptions r;
    r.radii = {Q(1, 4), Q(1, 2)};
    EXPECT_THROW(check_approx_pseudo_dissipative(gradient_of_g(), V({0}), PolyhedralCone::orthant(2), r),
                 PreconditionViolation);
}

TEST(DissipativityProperties, AcceptedRadiusShrinksSafely)
{
    // Acceptance at r implies acceptance at every smaller listed radius.
    std::mt19937 rng(41);
    for (int i = 0; i < 15; ++i) {
        const long a = uniform(rng, 1, 6);
        const long b = uniform(rng, -3, 3);
        const OperatorField f(1, 1, {{Polynomial(1, {Monomial{{1}, a}, Monomial{{2}, b}})}});
        const auto v = check_approx_pseudo_dissipative(f, V({0}), PolyhedralCone::orthant(1));
        for (const auto& t : v.traces) {
            ASSERT_TRUE(t.accepted_radius);
            DissipativityOptions o;
            o.eps_samples = {t.eps};
            for (const auto& r : default_radii())
                if (r <= *t.accepted_radius)
                    o.radii.push_back(r);
            const auto w = check_approx_pseudo_dissipative(f, V({0}), PolyhedralCone::orthant(1), o);
            for (const auto& att : w.traces[0].attempts)
                EXPECT_FALSE(att.violation);
        }
    }
}

TEST(DissipativityProperties, JointScalingKeepsVerdict)
{
    std::mt19937 rng(42);
    for (int i = 0; i < 10; ++i) {
        const OperatorField f(1, 1, {{Polynomial(1, {Monomial{{1}, uniform(rng, -4, 4)}, Monomial{{3}, uniform(rng, -2, 2)}})}},
                              {OperatorField::Override{V({0}), {parse_matrix(std::to_string(uniform(rng, -2, 2)))}}});
        const Rational s(uniform(rng, 1, 5), uniform(rng, 1, 5));
        DissipativityOptions o;
        DissipativityOptions os;
        for (const auto& e : default_eps_samples(PolyhedralCone::orthant(1))) {
            o.eps_samples.push_back(e);
            os.eps_samples.push_back(s * e);
        }
        const auto a = check_approx_pseudo_dissipative(f, V({0}), PolyhedralCone::orthant(1), o);
        const auto b = check_approx_pseudo_dissipative(f.scaled(s), V({0}), PolyhedralCone::orthant(1), os);
        EXPECT_EQ(a.falsified, b.falsified);
        for (std::size_t k = 0; k < a.traces.size(); ++k)
            EXPECT_EQ(a.traces[k].accepted_radius, b.traces[k].accepted_radius);
    }
}
