#pragma once

#include "dcvopt/cone.hpp"
#include "dcvopt/problem.hpp"

#include <optional>
#include <span>
#include <vector>

namespace dcvopt {

/// Max-norm ball around xbar; intersected with C when gridded.
struct NeighborhoodSpec {
    Rational radius{1, 2};

    NeighborhoodSpec() = default;
    explicit NeighborhoodSpec(Rational r);
};

/// Shear parameters m in (0,1) selecting the dilating cones
/// K'_m = {y : y1 + m*y2 >= 0, y2 + m*y1 >= 0}.
struct DilationFamily {
    std::vector<Rational> shears{Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(3, 4)};

    DilationFamily() = default;
    explicit DilationFamily(std::vector<Rational> m);
};

/// K'_m = cone{(-m, 1), (1, -m)}.
PolyhedralCone sheared_cone(const Rational& m);

/// F(x) - G(x) - (F(xbar) - G(xbar)) + eps.
RationalVector objective_gap(const DCProblem& problem, const RationalVector& x);

enum class MinimalityStatus { CertifiedOnGrid, Falsified, NotCertified };

struct MinimalityVerdict {
    MinimalityStatus status = MinimalityStatus::CertifiedOnGrid;
    std::optional<RationalVector> witness;
    std::optional<RationalVector> gap;
    /// Shear parameter used by a proper-minimality certificate.
    std::optional<Rational> shear;
    std::size_t points_checked = 0;
    std::size_t feasible_points = 0;

    bool certified() const noexcept { return status == MinimalityStatus::CertifiedOnGrid; }
};

/// eps-weak local minimality of xbar: no feasible point has its objective gap
/// in -int K. The points are expected to cover U ∩ C.
MinimalityVerdict check_eps_weak_local_min(const DCProblem& problem, std::span<const RationalVector> points);

MinimalityVerdict check_eps_weak_local_min(const DCProblem& problem, const NeighborhoodSpec& u,
                                           std::size_t points_per_axis);

/// eps-proper local minimality via the shear family; only Y = Q^2, K = Q^2_+.
/// NotCertified means no sampled K'_m worked, not a disproof.
MinimalityVerdict check_eps_proper_local_min(const DCProblem& problem, const DilationFamily& family,
                                             std::span<const RationalVector> points);

MinimalityVerdict check_eps_proper_local_min(const DCProblem& problem, const NeighborhoodSpec& u,
                                             const DilationFamily& family, std::size_t points_per_axis);

} // namespace dcvopt
