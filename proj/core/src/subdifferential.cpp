#include "dcvopt/subdifferential.hpp"

#include <algorithm>

namespace dcvopt {

namespace {

void check_operator_shape(const VectorMap& map, const LinearOperator& t)
{
    if (t.rows() != map.out_dim() || t.cols() != map.in_dim())
        throw DimensionMismatch("candidate operator shape does not match the map");
}

std::vector<RationalVector> with_xbar(const GridSpec& grid, const VectorMap& map, const RationalVector& xbar)
{
    std::vector<RationalVector> anchors{xbar};
    for (const auto& e : map.exceptions())
        anchors.push_back(e.point);
    return grid_points(grid, anchors);
}

} // namespace

SubdiffVerdict eps_subdiff_contains(const VectorMap& map, const PolyhedralCone& cone, const RationalVector& xbar,
                                    const LinearOperator& t, const RationalVector& eps,
                                    std::span<const RationalVector> points)
{
    check_operator_shape(map, t);
    if (cone.dim() != map.out_dim() || eps.dim() != map.out_dim())
        throw DimensionMismatch("subdifferential test: cone or eps outside the map's range");
    if (!cone_contains(cone, eps))
        throw PreconditionViolation("eps not in K");
    const RationalVector base = evaluate(map, xbar);
    for (const auto& x : points) {
        const RationalVector slack = evaluate(map, x) - base + eps - t.apply(x - xbar);
        if (!cone_contains(cone, slack))
            return SubdiffVerdict{SubdiffStatus::Falsified, x, points.size()};
    }
    return SubdiffVerdict{SubdiffStatus::CertifiedOnGrid, std::nullopt, points.size()};
}

SubdiffVerdict eps_subdiff_contains(const VectorMap& map, const PolyhedralCone& cone, const RationalVector& xbar,
                                    const LinearOperator& t, const RationalVector& eps, const GridSpec& grid)
{
    const auto pts = with_xbar(grid, map, xbar);
    return eps_subdiff_contains(map, cone, xbar, t, eps, pts);
}

SubdiffVerdict strong_subdiff_contains(const VectorMap& map, const PolyhedralCone& cone, const RationalVector& xbar,
                                       const LinearOperator& t, std::span<const RationalVector> points)
{
    return eps_subdiff_contains(map, cone, xbar, t, RationalVector::zero(map.out_dim()), points);
}

SubdiffVerdict strong_subdiff_contains(const VectorMap& map, const PolyhedralCone& cone, const RationalVector& xbar,
                                       const LinearOperator& t, const GridSpec& grid)
{
    const auto pts = with_xbar(grid, map, xbar);
    return strong_subdiff_contains(map, cone, xbar, t, pts);
}

SubdiffInterval scalar_eps_subdiff_interval(const VectorMap& phi, const Rational& xbar, const Rational& eps,
                                            std::span<const RationalVector> points)
{
    if (phi.in_dim() != 1 || phi.out_dim() != 1)
        throw DimensionMismatch("scalar subdifferential interval needs a map Q -> Q");
    if (eps < 0)
        throw PreconditionViolation("eps must be nonnegative");
    const Rational base = evaluate(phi, RationalVector{xbar})[0];
    SubdiffInterval out;
    for (const auto& p : points) {
        const Rational& x = p[0];
        if (x == xbar)
            continue;
        const Rational quotient = (evaluate(phi, p)[0] - base + eps) / (x - xbar);
        if (x > xbar)
            out.hi = out.hi ? std::min(*out.hi, quotient) : quotient;
        else
            out.lo = out.lo ? std::max(*out.lo, quotient) : quotient;
    }
    return out;
}

SubdiffInterval scalar_eps_subdiff_interval(const VectorMap& phi, const Rational& xbar, const Rational& eps,
                                            const GridSpec& grid)
{
    if (!grid.box.contains(RationalVector{xbar}))
        throw PreconditionViolation("grid interval must contain xbar");
    const auto pts = with_xbar(grid, phi, RationalVector{xbar});
    return scalar_eps_subdiff_interval(phi, xbar, eps, pts);
}

SubdiffVerdict scalarized_subdiff_contains(const DCProblem& problem, const RationalVector& ystar,
                                           const RationalVector& zstar, const LinearOperator& g,
                                           const Rational& eps_scalar, std::span<const RationalVector> points)
{
    if (ystar.dim() != problem.y_dim || zstar.dim() != problem.z_dim)
        throw DimensionMismatch("multiplier dimensions do not match Y and Z");
    if (g.rows() != 1 || g.cols() != problem.x_dim)
        throw DimensionMismatch("candidate functional must be 1 x dim X");
    auto combined = [&](const RationalVector& x) {
        return dot(ystar, evaluate(problem.F, x)) + dot(zstar, evaluate(problem.H, x));
    };
    const Rational base = combined(problem.xbar);
    for (const auto& x : points) {
        const Rational lhs = combined(x) - base + eps_scalar;
        if (lhs < g.apply(x - problem.xbar)[0])
            return SubdiffVerdict{SubdiffStatus::Falsified, x, points.size()};
    }
    return SubdiffVerdict{SubdiffStatus::CertifiedOnGrid, std::nullopt, points.size()};
}

SubdiffVerdict scalarized_subdiff_contains(const DCProblem& problem, const RationalVector& ystar,
                                           const RationalVector& zstar, const LinearOperator& g,
                                           const Rational& eps_scalar, const BoxSet& u, std::size_t points_per_axis)
{
    if (u.dim() != problem.x_dim)
        throw DimensionMismatch("neighborhood box must live in X");
    // U ∩ C as a box.
    RationalVector lo(u.dim()), hi(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        lo[i] = std::max(u.lower[i], problem.C.lower[i]);
        hi[i] = std::min(u.upper[i], problem.C.upper[i]);
    }
    const auto pts = grid_points(GridSpec(BoxSet(lo, hi), points_per_axis), problem.anchor_points());
    return scalarized_subdiff_contains(problem, ystar, zstar, g, eps_scalar, pts);
}

} // namespace dcvopt
