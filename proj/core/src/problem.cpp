#include "dcvopt/problem.hpp"

#include <algorithm>
#include <set>

namespace dcvopt {

// ---- VectorMap -------------------------------------------------------------

VectorMap::VectorMap(std::size_t in_dim, std::vector<Polynomial> coords, std::vector<ExceptionalPoint> exceptions)
    : in_dim_(in_dim), coords_(std::move(coords)), exceptions_(std::move(exceptions))
{
    if (in_dim_ == 0 || coords_.empty())
        throw Error("map dimensions must be positive");
    for (const auto& p : coords_)
        if (p.in_dim() != in_dim_)
            throw DimensionMismatch("map coordinate polynomial has wrong input dimension");
    for (std::size_t i = 0; i < exceptions_.size(); ++i) {
        const auto& e = exceptions_[i];
        if (e.point.dim() != in_dim_ || e.value.dim() != coords_.size())
            throw DimensionMismatch("exceptional point or value has wrong dimension");
        for (std::size_t j = 0; j < i; ++j)
            if (exceptions_[j].point == e.point)
                throw Error("duplicate exceptional point " + e.point.str());
    }
}

VectorMap VectorMap::zero(std::size_t in_dim, std::size_t out_dim)
{
    return VectorMap(in_dim, std::vector<Polynomial>(out_dim, Polynomial(in_dim, {})));
}

VectorMap VectorMap::affine(const LinearOperator& m, const RationalVector& b)
{
    if (b.dim() != m.rows())
        throw DimensionMismatch("affine map offset has wrong dimension");
    std::vector<Polynomial> coords;
    for (std::size_t r = 0; r < m.rows(); ++r)
        coords.push_back(Polynomial::affine(m.row(r), b[r]));
    return VectorMap(m.cols(), std::move(coords));
}

std::optional<std::size_t> VectorMap::exception_at(const RationalVector& x) const
{
    for (std::size_t i = 0; i < exceptions_.size(); ++i)
        if (exceptions_[i].point == x)
            return i;
    return std::nullopt;
}

LinearOperator VectorMap::polynomial_jacobian(const RationalVector& x) const
{
    if (x.dim() != in_dim_)
        throw DimensionMismatch("jacobian point has wrong dimension");
    LinearOperator j(out_dim(), in_dim_);
    for (std::size_t r = 0; r < out_dim(); ++r)
        for (std::size_t c = 0; c < in_dim_; ++c)
            j(r, c) = coords_[r].derivative(c)(x);
    return j;
}

VectorMap VectorMap::plus_affine(const LinearOperator& a, const RationalVector& b) const
{
    if (a.rows() != out_dim() || a.cols() != in_dim_ || b.dim() != out_dim())
        throw DimensionMismatch("affine shift has wrong shape");
    std::vector<Polynomial> coords = coords_;
    for (std::size_t r = 0; r < out_dim(); ++r)
        coords[r] += Polynomial::affine(a.row(r), b[r]);
    std::vector<ExceptionalPoint> ex = exceptions_;
    for (auto& e : ex)
        e.value += a.apply(e.point) + b;
    return VectorMap(in_dim_, std::move(coords), std::move(ex));
}

VectorMap VectorMap::scalarize(const RationalVector& weights) const
{
    if (weights.dim() != out_dim())
        throw DimensionMismatch("scalarization weights have wrong dimension");
    Polynomial sum(in_dim_, {});
    for (std::size_t r = 0; r < out_dim(); ++r) {
        Polynomial p = coords_[r];
        p *= weights[r];
        sum += p;
    }
    std::vector<ExceptionalPoint> ex;
    for (const auto& e : exceptions_)
        ex.push_back(ExceptionalPoint{e.point, RationalVector{dot(weights, e.value)}});
    return VectorMap(in_dim_, {sum}, std::move(ex));
}

RationalVector evaluate(const VectorMap& map, const RationalVector& x)
{
    if (x.dim() != map.in_dim())
        throw DimensionMismatch("map evaluated at point of dimension " + std::to_string(x.dim())
                                + ", expected " + std::to_string(map.in_dim()));
    if (auto idx = map.exception_at(x))
        return map.exceptions()[*idx].value;
    RationalVector y(map.out_dim());
    for (std::size_t r = 0; r < map.out_dim(); ++r)
        y[r] = map.coords()[r](x);
    return y;
}

VectorMap add_maps(const VectorMap& a, const VectorMap& b, const Rational& b_scale)
{
    if (a.in_dim() != b.in_dim() || a.out_dim() != b.out_dim())
        throw DimensionMismatch("adding maps of different shapes");
    std::vector<Polynomial> coords = a.coords();
    for (std::size_t r = 0; r < coords.size(); ++r) {
        Polynomial p = b.coords()[r];
        p *= b_scale;
        coords[r] += p;
    }
    std::vector<RationalVector> points;
    for (const auto& e : a.exceptions())
        points.push_back(e.point);
    for (const auto& e : b.exceptions())
        if (!a.exception_at(e.point))
            points.push_back(e.point);
    std::vector<ExceptionalPoint> ex;
    for (const auto& p : points)
        ex.push_back(ExceptionalPoint{p, evaluate(a, p) + b_scale * evaluate(b, p)});
    return VectorMap(a.in_dim(), std::move(coords), std::move(ex));
}

// ---- Boxes and grids ---------------------------------------------------------

BoxSet::BoxSet(RationalVector lo, RationalVector hi) : lower(std::move(lo)), upper(std::move(hi))
{
    require_same_dim(lower, upper, "box bounds");
    if (lower.dim() == 0)
        throw Error("box must have positive dimension");
    for (std::size_t i = 0; i < lower.dim(); ++i)
        if (lower[i] > upper[i])
            throw PreconditionViolation("box lower bound exceeds upper bound on axis " + std::to_string(i));
}

bool BoxSet::contains(const RationalVector& x) const
{
    require_same_dim(lower, x, "box membership");
    for (std::size_t i = 0; i < x.dim(); ++i)
        if (x[i] < lower[i] || x[i] > upper[i])
            return false;
    return true;
}

BoxSet BoxSet::intersect_ball(const RationalVector& center, const Rational& radius) const
{
    require_same_dim(lower, center, "box/ball intersection");
    if (radius <= 0)
        throw PreconditionViolation("neighborhood radius must be positive");
    RationalVector lo(dim()), hi(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        lo[i] = std::max(lower[i], Rational(center[i] - radius));
        hi[i] = std::min(upper[i], Rational(center[i] + radius));
        if (lo[i] > hi[i])
            throw PreconditionViolation("neighborhood does not meet the box");
    }
    return BoxSet(lo, hi);
}

GridSpec::GridSpec(BoxSet b, std::size_t points) : box(std::move(b)), points_per_axis(points)
{
    if (points_per_axis < 2)
        throw PreconditionViolation("grid needs at least 2 points per axis");
}

std::vector<RationalVector> grid_points(const GridSpec& spec, std::span<const RationalVector> include)
{
    const std::size_t n = spec.box.dim();
    if (spec.points_per_axis < 2)
        throw PreconditionViolation("grid needs at least 2 points per axis");
    std::vector<std::vector<Rational>> axes(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& lo = spec.box.lower[i];
        const Rational& hi = spec.box.upper[i];
        std::set<Rational> values;
        const std::size_t segments = spec.points_per_axis - 1;
        for (std::size_t k = 0; k <= segments; ++k)
            values.insert(lo + (hi - lo) * Rational(k, segments));
        for (const auto& p : include)
            if (p.dim() == n && spec.box.contains(p))
                values.insert(p[i]);
        axes[i].assign(values.begin(), values.end());
    }
    std::vector<RationalVector> points;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        RationalVector p(n);
        for (std::size_t i = 0; i < n; ++i)
            p[i] = axes[i][idx[i]];
        points.push_back(std::move(p));
        std::size_t axis = n;
        while (axis > 0) {
            --axis;
            if (++idx[axis] < axes[axis].size())
                break;
            idx[axis] = 0;
            if (axis == 0)
                return points;
        }
    }
}

// ---- DCProblem -------------------------------------------------------------

void DCProblem::validate() const
{
    auto need = [](bool ok, const std::string& what) {
        if (!ok)
            throw DimensionMismatch(what);
    };
    need(x_dim > 0 && y_dim > 0 && z_dim > 0, "space dimensions must be positive");
    need(F.in_dim() == x_dim && F.out_dim() == y_dim, "F must map X into Y");
    need(G.in_dim() == x_dim && G.out_dim() == y_dim, "G must map X into Y");
    need(H.in_dim() == x_dim && H.out_dim() == z_dim, "H must map X into Z");
    need(S.in_dim() == x_dim && S.out_dim() == z_dim, "S must map X into Z");
    need(C.dim() == x_dim, "C must live in X");
    need(K.dim() == y_dim, "K must live in Y");
    need(D.dim() == z_dim, "D must live in Z");
    need(eps.dim() == y_dim, "eps must live in Y");
    need(xbar.dim() == x_dim, "xbar must live in X");

    if (!K.full_dimensional() || K.halfspaces().empty())
        throw PreconditionViolation("K must be a proper cone with nonempty interior");
    if (!D.full_dimensional() || D.halfspaces().empty())
        throw PreconditionViolation("D must be a proper cone with nonempty interior");
    if (!cone_contains(K, eps))
        throw PreconditionViolation("eps not in K");
    if (!C.contains(xbar))
        throw PreconditionViolation("xbar not in C");
}

std::vector<RationalVector> DCProblem::anchor_points() const
{
    std::vector<RationalVector> pts{xbar};
    for (const VectorMap* m : {&F, &G, &H, &S})
        for (const auto& e : m->exceptions())
            pts.push_back(e.point);
    return pts;
}

bool feasible_contains(const DCProblem& problem, const RationalVector& x)
{
    if (x.dim() != problem.x_dim)
        throw DimensionMismatch("feasibility query at point of wrong dimension");
    if (!problem.C.contains(x))
        return false;
    const RationalVector slack = evaluate(problem.H, x) - evaluate(problem.S, x);
    return cone_contains(problem.D, -slack);
}

std::vector<RationalVector> neighborhood_grid(const DCProblem& problem, const Rational& radius,
                                              std::size_t points_per_axis)
{
    const GridSpec spec(problem.C.intersect_ball(problem.xbar, radius), points_per_axis);
    return grid_points(spec, problem.anchor_points());
}

std::vector<RationalVector> domain_grid(const DCProblem& problem, std::size_t points_per_axis)
{
    return grid_points(GridSpec(problem.C, points_per_axis), problem.anchor_points());
}

// ---- Convexity verdicts ------------------------------------------------------

const std::vector<Rational>& default_lambdas()
{
    static const std::vector<Rational> lambdas{Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    return lambdas;
}

namespace {

std::vector<RationalVector> anchored_grid(const VectorMap& map, const GridSpec& grid)
{
    std::vector<RationalVector> anchors;
    for (const auto& e : map.exceptions())
        anchors.push_back(e.point);
    return grid_points(grid, anchors);
}

} // namespace

ConvexityVerdict check_cone_convex(const VectorMap& map, const PolyhedralCone& cone,
                                   std::span<const RationalVector> points, std::span<const Rational> lambdas)
{
    if (map.out_dim() != cone.dim())
        throw DimensionMismatch("convexity check: cone does not live in the map's range");
    std::vector<RationalVector> images;
    images.reserve(points.size());
    for (const auto& p : points)
        images.push_back(evaluate(map, p));

    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j)
                continue;
            for (const auto& lambda : lambdas) {
                const Rational mu = 1 - lambda;
                const RationalVector mid = lambda * points[i] + mu * points[j];
                const RationalVector chord = lambda * images[i] + mu * images[j];
                if (!cone_contains(cone, chord - evaluate(map, mid)))
                    return ConvexityVerdict{true, ConvexityWitness{points[i], points[j], lambda}};
            }
        }
    }
    return {};
}

ConvexityVerdict check_cone_convex(const VectorMap& map, const PolyhedralCone& cone, const GridSpec& grid,
                                   std::span<const Rational> lambdas)
{
    const auto pts = anchored_grid(map, grid);
    return check_cone_convex(map, cone, pts, lambdas);
}

ConvexityVerdict check_convexlike(const VectorMap& map, const PolyhedralCone& cone,
                                  std::span<const RationalVector> points, std::span<const Rational> lambdas)
{
    if (map.out_dim() != cone.dim())
        throw DimensionMismatch("convexlike check: cone does not live in the map's range");
    std::vector<RationalVector> images;
    images.reserve(points.size());
    for (const auto& p : points)
        images.push_back(evaluate(map, p));

    // A target dominates some image iff it dominates some K-minimal image.
    std::vector<RationalVector> minimal;
    for (const auto& img : images) {
        const bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const RationalVector& m) {
            return cone_contains(cone, img - m);
        });
        if (dominated)
            continue;
        std::erase_if(minimal, [&](const RationalVector& m) { return cone_contains(cone, m - img); });
        minimal.push_back(img);
    }

    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j)
                continue;
            for (const auto& lambda : lambdas) {
                const RationalVector target = lambda * images[i] + (1 - lambda) * images[j];
                const bool witnessed = std::any_of(minimal.begin(), minimal.end(), [&](const RationalVector& m) {
                    return cone_contains(cone, target - m);
                });
                if (witnessed)
                    continue;
                const RationalVector mid = lambda * points[i] + (1 - lambda) * points[j];
                if (!cone_contains(cone, target - evaluate(map, mid)))
                    return ConvexityVerdict{true, ConvexityWitness{points[i], points[j], lambda}};
            }
        }
    }
    return {};
}

ConvexityVerdict check_convexlike(const VectorMap& map, const PolyhedralCone& cone, const GridSpec& grid,
                                  std::span<const Rational> lambdas)
{
    const auto pts = anchored_grid(map, grid);
    return check_convexlike(map, cone, pts, lambdas);
}

} // namespace dcvopt
