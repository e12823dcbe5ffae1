#include "dcvopt/cone.hpp"

#include "dcvopt/linalg.hpp"

#include <algorithm>
#include <string>

namespace dcvopt {

namespace {

void check_dim(std::size_t dim)
{
    if (dim == 0 || dim > PolyhedralCone::kMaxDim)
        throw Error("cone dimension " + std::to_string(dim) + " outside supported range 1.."
                    + std::to_string(PolyhedralCone::kMaxDim));
}

void sort_unique(std::vector<RationalVector>& vs)
{
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

bool satisfies_all(std::span<const RationalVector> normals, const RationalVector& y)
{
    return std::all_of(normals.begin(), normals.end(),
                       [&](const RationalVector& a) { return dot(a, y) >= 0; });
}

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit)
{
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<RationalVector> extreme_rays(std::span<const RationalVector> normals, std::size_t dim)
{
    check_dim(dim);
    for (const auto& a : normals)
        if (a.dim() != dim)
            throw DimensionMismatch("halfspace normal dimension does not match cone dimension");

    const std::vector<RationalVector> rows(normals.begin(), normals.end());
    const auto lineality = linalg::null_space(rows, dim);

    std::vector<RationalVector> rays;
    for (const auto& b : lineality) {
        rays.push_back(b);
        rays.push_back(-b);
    }
    const std::size_t pointed_dim = dim - lineality.size();
    if (pointed_dim == 0) {
        sort_unique(rays);
        return rays;
    }

    // A ray of the pointed part is cut out by the lineality equations plus
    // pointed_dim - 1 independent tight halfspaces.
    for_each_subset(rows.size(), pointed_dim - 1, [&](const std::vector<std::size_t>& subset) {
        std::vector<RationalVector> system = lineality;
        for (std::size_t i : subset)
            system.push_back(rows[i]);
        if (linalg::rank(system, dim) != dim - 1)
            return;
        const auto line = linalg::null_space(system, dim);
        const RationalVector& r = line.front();
        if (satisfies_all(normals, r))
            rays.push_back(r);
        else if (satisfies_all(normals, -r))
            rays.push_back(-r);
    });
    sort_unique(rays);
    return rays;
}

PolyhedralCone::PolyhedralCone(std::vector<RationalVector> generators)
{
    if (generators.empty())
        throw Error("cone needs at least one generator");
    dim_ = generators.front().dim();
    check_dim(dim_);
    for (auto& g : generators) {
        if (g.dim() != dim_)
            throw DimensionMismatch("cone generators have inconsistent dimensions");
        if (g.is_zero())
            throw Error("cone generator must be nonzero");
        g = primitive_integer(g);
    }
    sort_unique(generators);
    generators_ = std::move(generators);
    halfspaces_ = extreme_rays(generators_, dim_);
    full_dimensional_ = linalg::rank(generators_, dim_) == dim_;
}

PolyhedralCone PolyhedralCone::orthant(std::size_t dim)
{
    check_dim(dim);
    std::vector<RationalVector> gens;
    for (std::size_t i = 0; i < dim; ++i)
        gens.push_back(RationalVector::unit(dim, i));
    return PolyhedralCone(std::move(gens));
}

PolyhedralCone PolyhedralCone::from_halfspaces(std::span<const RationalVector> normals, std::size_t dim)
{
    auto rays = extreme_rays(normals, dim);
    if (rays.empty())
        throw Error("halfspace system describes the zero cone");
    return PolyhedralCone(std::move(rays));
}

PolyhedralCone PolyhedralCone::minimal() const
{
    return from_halfspaces(halfspaces_, dim_);
}

bool cone_contains(const PolyhedralCone& cone, const RationalVector& v, bool strict)
{
    if (v.dim() != cone.dim())
        throw DimensionMismatch("cone_contains: vector dimension " + std::to_string(v.dim())
                                + " vs cone dimension " + std::to_string(cone.dim()));
    if (!strict)
        return satisfies_all(cone.halfspaces(), v);
    if (!cone.full_dimensional())
        throw InteriorEmpty("strict membership queried on a cone with empty interior");
    return std::all_of(cone.halfspaces().begin(), cone.halfspaces().end(),
                       [&](const RationalVector& a) { return dot(a, v) > 0; });
}

bool order_relation(const PolyhedralCone& cone, const RationalVector& yl, const RationalVector& yr,
                    Order kind)
{
    require_same_dim(yl, yr, "order_relation");
    const RationalVector diff = yr - yl;
    switch (kind) {
    case Order::Preceq:
        return cone_contains(cone, diff, false);
    case Order::Prec:
        return cone_contains(cone, diff, true);
    case Order::NotPreceq:
        return !cone_contains(cone, diff, false);
    case Order::NotPrec:
        return !cone_contains(cone, diff, true);
    }
    return false;
}

PolyhedralCone dual_cone(const PolyhedralCone& cone)
{
    return PolyhedralCone::from_halfspaces(cone.generators(), cone.dim());
}

std::vector<RationalVector> linearity(const PolyhedralCone& cone)
{
    return linalg::null_space(cone.halfspaces(), cone.dim());
}

bool in_linearity(const PolyhedralCone& cone, const RationalVector& g)
{
    return cone_contains(cone, g) && cone_contains(cone, -g);
}

bool strict_polar_contains(const PolyhedralCone& cone, const RationalVector& ystar)
{
    if (ystar.dim() != cone.dim())
        throw DimensionMismatch("strict_polar_contains: dimension mismatch");
    for (const auto& g : cone.generators()) {
        const Rational pairing = dot(ystar, g);
        if (pairing < 0)
            return false;
        if (pairing == 0 && !in_linearity(cone, g))
            return false;
    }
    return true;
}

bool same_cone(const PolyhedralCone& a, const PolyhedralCone& b)
{
    if (a.dim() != b.dim())
        return false;
    auto inside = [](const PolyhedralCone& x, const PolyhedralCone& y) {
        return std::all_of(x.generators().begin(), x.generators().end(),
                           [&](const RationalVector& g) { return cone_contains(y, g); });
    };
    return inside(a, b) && inside(b, a);
}

} // namespace dcvopt
