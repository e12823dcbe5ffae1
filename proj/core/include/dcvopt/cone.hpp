#pragma once

#include "dcvopt/rational.hpp"

#include <span>
#include <vector>

namespace dcvopt {

/// Convex cone in Q^n (n <= 4) generated by finitely many vectors, with its
/// halfspace description {y : <a_j, y> >= 0} derived at construction.
///
/// Generators are stored as primitive integer vectors (positive rescaling
/// only), deduplicated and sorted, so two cones built from the same rays in
/// any order and scale compare equal.
class PolyhedralCone {
public:
    static constexpr std::size_t kMaxDim = 4;

    explicit PolyhedralCone(std::vector<RationalVector> generators);

    /// Nonnegative orthant Q^n_+.
    static PolyhedralCone orthant(std::size_t dim);

    /// Cone {y : <a, y> >= 0 for all a in normals}. Throws if that set is {0}.
    static PolyhedralCone from_halfspaces(std::span<const RationalVector> normals, std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<RationalVector>& generators() const noexcept { return generators_; }
    const std::vector<RationalVector>& halfspaces() const noexcept { return halfspaces_; }
    bool full_dimensional() const noexcept { return full_dimensional_; }

    /// Same cone, generated by its canonical minimal system: plus/minus a
    /// fixed basis of the linearity space and the extreme rays of the
    /// pointed part.
    PolyhedralCone minimal() const;

    friend bool operator==(const PolyhedralCone& a, const PolyhedralCone& b)
    {
        return a.generators_ == b.generators_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<RationalVector> generators_;
    std::vector<RationalVector> halfspaces_;
    bool full_dimensional_ = false;
};

/// Generators of {y in Q^dim : <a, y> >= 0 for all a in normals} in canonical
/// minimal form (see PolyhedralCone::minimal). Empty when the set is {0}.
std::vector<RationalVector> extreme_rays(std::span<const RationalVector> normals, std::size_t dim);

/// v in K, or v in int K when strict. Strict queries on a cone with empty
/// interior throw InteriorEmpty.
bool cone_contains(const PolyhedralCone& cone, const RationalVector& v, bool strict = false);

enum class Order {
    Preceq,    // yr - yl in K
    Prec,      // yr - yl in int K
    NotPreceq, // yr - yl not in K
    NotPrec,   // yr - yl not in int K
};

bool order_relation(const PolyhedralCone& cone, const RationalVector& yl, const RationalVector& yr,
                    Order kind);

/// K* = {y* : <y*, y> >= 0 for all y in K}, with Y* identified with Y through
/// the standard pairing.
PolyhedralCone dual_cone(const PolyhedralCone& cone);

/// Basis of the linearity space K ∩ -K.
std::vector<RationalVector> linearity(const PolyhedralCone& cone);

/// Whether g lies in K ∩ -K.
bool in_linearity(const PolyhedralCone& cone, const RationalVector& g);

/// y* in (K*)°: nonnegative on K and strictly positive on K \ l(K).
bool strict_polar_contains(const PolyhedralCone& cone, const RationalVector& ystar);

/// Set equality of the two cones (mutual generator containment).
bool same_cone(const PolyhedralCone& a, const PolyhedralCone& b);

} // namespace dcvopt
