#include "dcvopt/pareto.hpp"

namespace dcvopt {

NeighborhoodSpec::NeighborhoodSpec(Rational r) : radius(std::move(r))
{
    if (radius <= 0)
        throw PreconditionViolation("neighborhood radius must be positive");
}

DilationFamily::DilationFamily(std::vector<Rational> m) : shears(std::move(m))
{
    if (shears.empty())
        throw PreconditionViolation("dilation family must not be empty");
    for (const auto& s : shears)
        if (s <= 0 || s >= 1)
            throw PreconditionViolation("shear parameter " + to_string(s) + " outside (0,1)");
}

PolyhedralCone sheared_cone(const Rational& m)
{
    return PolyhedralCone({RationalVector{-m, Rational(1)}, RationalVector{Rational(1), -m}});
}

RationalVector objective_gap(const DCProblem& problem, const RationalVector& x)
{
    const auto& xb = problem.xbar;
    return evaluate(problem.F, x) - evaluate(problem.G, x) - (evaluate(problem.F, xb) - evaluate(problem.G, xb))
         + problem.eps;
}

namespace {

MinimalityVerdict scan(const DCProblem& problem, const PolyhedralCone& order_cone,
                       std::span<const RationalVector> points)
{
    MinimalityVerdict v;
    for (const auto& x : points) {
        ++v.points_checked;
        if (!feasible_contains(problem, x))
            continue;
        ++v.feasible_points;
        const RationalVector gap = objective_gap(problem, x);
        if (cone_contains(order_cone, -gap, true)) {
            v.status = MinimalityStatus::Falsified;
            v.witness = x;
            v.gap = gap;
            return v;
        }
    }
    return v;
}

} // namespace

MinimalityVerdict check_eps_weak_local_min(const DCProblem& problem, std::span<const RationalVector> points)
{
    return scan(problem, problem.K, points);
}

MinimalityVerdict check_eps_weak_local_min(const DCProblem& problem, const NeighborhoodSpec& u,
                                           std::size_t points_per_axis)
{
    const auto pts = neighborhood_grid(problem, u.radius, points_per_axis);
    return check_eps_weak_local_min(problem, pts);
}

MinimalityVerdict check_eps_proper_local_min(const DCProblem& problem, const DilationFamily& family,
                                             std::span<const RationalVector> points)
{
    if (problem.y_dim != 2 || !same_cone(problem.K, PolyhedralCone::orthant(2)))
        throw PreconditionViolation("proper minimality is supported only for Y = Q^2 with K = Q^2_+");
    MinimalityVerdict last;
    for (const auto& m : family.shears) {
        MinimalityVerdict v = scan(problem, sheared_cone(m), points);
        if (v.certified()) {
            v.shear = m;
            return v;
        }
        last = std::move(v);
    }
    last.status = MinimalityStatus::NotCertified;
    return last;
}

MinimalityVerdict check_eps_proper_local_min(const DCProblem& problem, const NeighborhoodSpec& u,
                                             const DilationFamily& family, std::size_t points_per_axis)
{
    const auto pts = neighborhood_grid(problem, u.radius, points_per_axis);
    return check_eps_proper_local_min(problem, family, pts);
}

} // namespace dcvopt
