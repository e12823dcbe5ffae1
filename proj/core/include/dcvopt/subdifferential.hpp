#pragma once

#include "dcvopt/cone.hpp"
#include "dcvopt/linear_operator.hpp"
#include "dcvopt/problem.hpp"

#include <optional>
#include <span>
#include <vector>

namespace dcvopt {

enum class SubdiffStatus { CertifiedOnGrid, Falsified };

struct SubdiffVerdict {
    SubdiffStatus status = SubdiffStatus::CertifiedOnGrid;
    std::optional<RationalVector> witness;
    std::size_t grid_size = 0;

    bool certified() const noexcept { return status == SubdiffStatus::CertifiedOnGrid; }
};

/// T in ∂F(xbar) on the given points: F(x) - F(xbar) - T(x - xbar) in K.
SubdiffVerdict strong_subdiff_contains(const VectorMap& map, const PolyhedralCone& cone, const RationalVector& xbar,
                                       const LinearOperator& t, std::span<const RationalVector> points);

SubdiffVerdict strong_subdiff_contains(const VectorMap& map, const PolyhedralCone& cone, const RationalVector& xbar,
                                       const LinearOperator& t, const GridSpec& grid);

/// T in ∂_eps F(xbar): same with +eps slack. eps must lie in K.
SubdiffVerdict eps_subdiff_contains(const VectorMap& map, const PolyhedralCone& cone, const RationalVector& xbar,
                                    const LinearOperator& t, const RationalVector& eps,
                                    std::span<const RationalVector> points);

SubdiffVerdict eps_subdiff_contains(const VectorMap& map, const PolyhedralCone& cone, const RationalVector& xbar,
                                    const LinearOperator& t, const RationalVector& eps, const GridSpec& grid);

/// Grid-relative eps-subdifferential of a scalar function of one variable.
/// A missing bound means no grid point on that side (unbounded).
struct SubdiffInterval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    bool empty() const { return lo && hi && *lo > *hi; }
    bool contains(const Rational& t) const { return (!lo || *lo <= t) && (!hi || t <= *hi); }
};

SubdiffInterval scalar_eps_subdiff_interval(const VectorMap& phi, const Rational& xbar, const Rational& eps,
                                            std::span<const RationalVector> points);

SubdiffInterval scalar_eps_subdiff_interval(const VectorMap& phi, const Rational& xbar, const Rational& eps,
                                            const GridSpec& grid);

/// Tests whether the functional g (1 x n) lies in
/// ∂_{eps}(y* o F + z* o H + δ_{U ∩ C})(xbar); the indicator is realized by
/// taking the points from U ∩ C.
SubdiffVerdict scalarized_subdiff_contains(const DCProblem& problem, const RationalVector& ystar,
                                           const RationalVector& zstar, const LinearOperator& g,
                                           const Rational& eps_scalar, std::span<const RationalVector> points);

SubdiffVerdict scalarized_subdiff_contains(const DCProblem& problem, const RationalVector& ystar,
                                           const RationalVector& zstar, const LinearOperator& g,
                                           const Rational& eps_scalar, const BoxSet& u, std::size_t points_per_axis);

} // namespace dcvopt
