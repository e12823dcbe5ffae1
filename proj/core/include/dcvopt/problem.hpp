#pragma once

#include "dcvopt/cone.hpp"
#include "dcvopt/linear_operator.hpp"
#include "dcvopt/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dcvopt {

struct Monomial {
    std::vector<unsigned> exponents;
    Rational coeff;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Multivariate polynomial over Q. Terms are kept merged, sorted by exponent
/// tuple, and free of zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::size_t in_dim, std::vector<Monomial> terms);

    static Polynomial constant(std::size_t in_dim, const Rational& c);
    /// <coeffs, x> + c
    static Polynomial affine(const RationalVector& coeffs, const Rational& c);

    std::size_t in_dim() const noexcept { return in_dim_; }
    const std::vector<Monomial>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational operator()(const RationalVector& x) const;
    Polynomial derivative(std::size_t var) const;

    Polynomial& operator+=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    Polynomial& operator*=(const Rational& s);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Text form accepted by parse_polynomial ("x^4 - 1/2*x"; variables are
    /// x when in_dim is 1, x0, x1, ... otherwise).
    std::string str() const;

private:
    void canonicalize();

    std::size_t in_dim_ = 0;
    std::vector<Monomial> terms_;
};

Polynomial parse_polynomial(std::string_view text, std::size_t in_dim);

/// Overrides the polynomial value at one exact point.
struct ExceptionalPoint {
    RationalVector point;
    RationalVector value;

    friend bool operator==(const ExceptionalPoint&, const ExceptionalPoint&) = default;
};

/// Map Q^in -> Q^out: one polynomial per output coordinate, plus a finite
/// list of exact-point overrides.
class VectorMap {
public:
    VectorMap() = default;
    VectorMap(std::size_t in_dim, std::vector<Polynomial> coords, std::vector<ExceptionalPoint> exceptions = {});

    static VectorMap zero(std::size_t in_dim, std::size_t out_dim);
    /// x -> M x + b
    static VectorMap affine(const LinearOperator& m, const RationalVector& b);

    std::size_t in_dim() const noexcept { return in_dim_; }
    std::size_t out_dim() const noexcept { return coords_.size(); }
    const std::vector<Polynomial>& coords() const noexcept { return coords_; }
    const std::vector<ExceptionalPoint>& exceptions() const noexcept { return exceptions_; }

    /// Index of the override at exactly x, if any.
    std::optional<std::size_t> exception_at(const RationalVector& x) const;

    /// Jacobian of the polynomial part at x (overrides are ignored).
    LinearOperator polynomial_jacobian(const RationalVector& x) const;

    /// x -> this(x) + A x + b, overrides shifted accordingly.
    VectorMap plus_affine(const LinearOperator& a, const RationalVector& b) const;

    /// Linear combination x -> sum_i w_i * this_i(x) as a scalar map.
    VectorMap scalarize(const RationalVector& weights) const;

    friend bool operator==(const VectorMap&, const VectorMap&) = default;

private:
    std::size_t in_dim_ = 0;
    std::vector<Polynomial> coords_;
    std::vector<ExceptionalPoint> exceptions_;
};

/// Exact evaluation; an override wins when x equals its point.
RationalVector evaluate(const VectorMap& map, const RationalVector& x);

/// Pointwise sum of two maps with the same shapes. The result carries an
/// override at every exceptional point of either operand.
VectorMap add_maps(const VectorMap& a, const VectorMap& b, const Rational& b_scale = 1);

/// Closed box {x : lower <= x <= upper}.
struct BoxSet {
    RationalVector lower;
    RationalVector upper;

    BoxSet() = default;
    BoxSet(RationalVector lo, RationalVector hi);

    std::size_t dim() const noexcept { return lower.dim(); }
    bool contains(const RationalVector& x) const;
    /// Intersection with the max-norm ball of radius r around center.
    /// Throws PreconditionViolation if empty.
    BoxSet intersect_ball(const RationalVector& center, const Rational& radius) const;

    friend bool operator==(const BoxSet&, const BoxSet&) = default;
};

struct GridSpec {
    BoxSet box;
    std::size_t points_per_axis = 101;

    GridSpec() = default;
    GridSpec(BoxSet b, std::size_t points);
};

/// Points of the uniform grid on spec.box, lexicographically ordered, with the
/// coordinates of every point in `include` (that lies in the box) merged into
/// the per-axis values.
std::vector<RationalVector> grid_points(const GridSpec& spec, std::span<const RationalVector> include = {});

/// Problem (P): K-minimize F - G over x in C with H - S in -D.
struct DCProblem {
    std::size_t x_dim = 0;
    std::size_t y_dim = 0;
    std::size_t z_dim = 0;
    VectorMap F, G, H, S;
    BoxSet C;
    PolyhedralCone K;
    PolyhedralCone D;
    RationalVector eps;
    RationalVector xbar;

    /// Throws DimensionMismatch / PreconditionViolation naming the broken
    /// invariant (dimensions, K and D with interior, eps in K, xbar in C).
    void validate() const;

    /// Every exceptional point of F, G, H, S together with xbar.
    std::vector<RationalVector> anchor_points() const;

    friend bool operator==(const DCProblem&, const DCProblem&) = default;
};

/// x in Ω: x in C and H(x) - S(x) in -D.
bool feasible_contains(const DCProblem& problem, const RationalVector& x);

/// Grid on C ∩ B(xbar, radius) (max-norm) containing xbar and all exceptional
/// points inside the box.
std::vector<RationalVector> neighborhood_grid(const DCProblem& problem, const Rational& radius,
                                              std::size_t points_per_axis);

/// Grid on all of C, anchored the same way.
std::vector<RationalVector> domain_grid(const DCProblem& problem, std::size_t points_per_axis);

const std::vector<Rational>& default_lambdas();

struct ConvexityWitness {
    RationalVector x1;
    RationalVector x2;
    Rational lambda;
};

/// Grid-relative verdict: NotFalsified never claims a proof.
struct ConvexityVerdict {
    bool falsified = false;
    std::optional<ConvexityWitness> witness;
};

/// K-convexity inequality F(l x1 + (1-l) x2) <=_K l F(x1) + (1-l) F(x2) over
/// all ordered point pairs and lambdas. First violation in grid order wins.
ConvexityVerdict check_cone_convex(const VectorMap& map, const PolyhedralCone& cone,
                                   std::span<const RationalVector> points,
                                   std::span<const Rational> lambdas = default_lambdas());

ConvexityVerdict check_cone_convex(const VectorMap& map, const PolyhedralCone& cone, const GridSpec& grid,
                                   std::span<const Rational> lambdas = default_lambdas());

/// K-convexlikeness. The existential x3 ranges over the points themselves and
/// the combination point l x1 + (1-l) x2, so convex maps always pass.
ConvexityVerdict check_convexlike(const VectorMap& map, const PolyhedralCone& cone,
                                  std::span<const RationalVector> points,
                                  std::span<const Rational> lambdas = default_lambdas());

ConvexityVerdict check_convexlike(const VectorMap& map, const PolyhedralCone& cone, const GridSpec& grid,
                                  std::span<const Rational> lambdas = default_lambdas());

} // namespace dcvopt
