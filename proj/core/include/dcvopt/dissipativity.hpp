#pragma once

#include "dcvopt/cone.hpp"
#include "dcvopt/linear_operator.hpp"
#include "dcvopt/problem.hpp"

#include <optional>
#include <vector>

namespace dcvopt {

/// Finitely representable set-valued map x ⇉ {T_1(x), ..., T_k(x)} into
/// L(Q^n, Q^m). Each branch gives one operator whose entries are polynomials
/// in x; exceptional points replace the whole operator list.
class OperatorField {
public:
    struct Override {
        RationalVector point;
        std::vector<LinearOperator> operators;
    };

    /// Each branch is an m*n list of polynomials in row-major order.
    OperatorField(std::size_t rows, std::size_t in_dim, std::vector<std::vector<Polynomial>> branches,
                  std::vector<Override> overrides = {});

    static OperatorField constant(const LinearOperator& op);
    /// x ⇉ {Jacobian of map's polynomial part at x}.
    static OperatorField jacobian_of(const VectorMap& map);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t in_dim() const noexcept { return in_dim_; }
    const std::vector<Override>& overrides() const noexcept { return overrides_; }

    std::vector<LinearOperator> at(const RationalVector& x) const;

    /// Same field with every operator multiplied by s.
    OperatorField scaled(const Rational& s) const;

private:
    std::size_t rows_;
    std::size_t in_dim_;
    std::vector<std::vector<Polynomial>> branches_;
    std::vector<Override> overrides_;
};

struct DissipativityOptions {
    /// Empty means the default sample w/2^k, k = 0..4, with w = (1,...,1) when
    /// that is interior to K and the sum of K's generators otherwise.
    std::vector<RationalVector> eps_samples;
    /// Strictly decreasing; empty means 2^-k, k = 0..10.
    std::vector<Rational> radii;
    std::size_t points_per_axis = 21;
};

struct RadiusAttempt {
    Rational radius;
    /// First grid point in the radius-r ball (max norm) with no admissible pair.
    std::optional<RationalVector> violation;
};

struct EpsTrace {
    RationalVector eps;
    std::vector<RadiusAttempt> attempts;
    /// Largest radius whose grid satisfied the inequality everywhere.
    std::optional<Rational> accepted_radius;
};

struct DissipativityVerdict {
    bool falsified = false;
    std::vector<EpsTrace> traces;
    /// Set when falsified: the eps sample whose radii were exhausted and the
    /// violating point at the smallest radius.
    std::optional<RationalVector> failing_eps;
    std::optional<RationalVector> witness;
};

std::vector<RationalVector> default_eps_samples(const PolyhedralCone& k);
std::vector<Rational> default_radii();

/// Sampling verdict for approximate pseudo-dissipativity of M at xbar, with
/// d the max-norm distance: for each eps sample, some radius must make
/// eps*d(x, xbar) - (T - T*)(x - xbar) in K solvable by T in M(x),
/// T* in M(xbar) at every grid point of the ball.
DissipativityVerdict check_approx_pseudo_dissipative(const OperatorField& field, const RationalVector& xbar,
                                                     const PolyhedralCone& k,
                                                     const DissipativityOptions& options = {});

} // namespace dcvopt
