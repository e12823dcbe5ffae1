#pragma once

#include "dcvopt/cone.hpp"
#include "dcvopt/linear_operator.hpp"
#include "dcvopt/lp.hpp"
#include "dcvopt/pareto.hpp"
#include "dcvopt/problem.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dcvopt {

enum class Target { Weak, Proper };
enum class Mode { Corrected, LegacyGL };

const char* to_string(Target t);
const char* to_string(Mode m);

/// Multipliers (y*, z*) together with the system they were solved from, so
/// the certificate can be re-checked exactly.
struct MultiplierCertificate {
    RationalVector ystar;
    RationalVector zstar;
    LinearFeasibilityProblem system;
    std::vector<Rational> residuals;
    std::string mode;

    /// Recomputes every residual from (y*, z*) and checks every relation.
    bool reverify() const;
};

/// (alpha, beta) in int K x int D, checked at construction.
class CorrectionPair {
public:
    CorrectionPair(RationalVector alpha, RationalVector beta, const PolyhedralCone& k, const PolyhedralCone& d);

    const RationalVector& alpha() const noexcept { return alpha_; }
    const RationalVector& beta() const noexcept { return beta_; }

private:
    RationalVector alpha_;
    RationalVector beta_;
};

/// w/2^k for k = 0..3, then 2w, 4w, 8w, with w = (1,...,1) (or the generator
/// sum when (1,...,1) is not interior). Large corrections tighten the
/// condition on the x < xbar side, so the sample runs in both directions.
std::vector<CorrectionPair> default_corrections(const PolyhedralCone& k, const PolyhedralCone& d);

/// Interior direction used for the default samples of a cone.
RationalVector interior_direction(const PolyhedralCone& cone);

// ---- Convexlike alternative -------------------------------------------------

enum class AlternativeKind { SolutionExists, Multipliers, GridGap };

struct AlternativeResult {
    AlternativeKind kind = AlternativeKind::GridGap;
    std::optional<RationalVector> solution;
    std::optional<MultiplierCertificate> certificate;
    std::vector<std::string> warnings;
};

/// Either a point with F(x) in -int K and G(x) in -int D, or (y*, z*) in
/// K* x D*, not both zero, with <y*, F(x)> + <z*, G(x)> >= 0 at every point.
/// When neither exists on the points, the Farkas weights of the multiplier
/// system give a convex combination of points that is tried as a solution;
/// GridGap is returned only if it fails too.
AlternativeResult alternative_system(const VectorMap& f, const VectorMap& g, const PolyhedralCone& k,
                                     const PolyhedralCone& d, std::span<const RationalVector> points);

// ---- Sufficient conditions --------------------------------------------------

struct SufficientCase {
    LinearOperator t;
    LinearOperator l;
    std::optional<CorrectionPair> correction;
    std::optional<MultiplierCertificate> certificate;
};

struct SufficientResult {
    bool all_certified = false;
    std::vector<SufficientCase> cases;
    /// First (T, L, alpha, beta) without multipliers.
    std::optional<SufficientCase> failed_for;
    std::vector<std::string> warnings;
};

struct SufficientRequest {
    std::vector<LinearOperator> candidates_t;
    std::vector<LinearOperator> candidates_l;
    std::vector<CorrectionPair> corrections;
    Target target = Target::Weak;
    Mode mode = Mode::Corrected;
};

/// For every candidate (T, L) (and correction pair in corrected mode) solves
/// for (y*, z*) with y* in K* \ {0} (or (K*)° for Proper), z* in D*,
/// <z*, H(xbar) - S(xbar)> = 0 and, at every point,
/// (y* o F + z* o H)(x) - (y* o F + z* o H)(xbar)
///     >= <y*, (T - alpha)(x - xbar)> + <z*, (L - beta)(x - xbar)>.
/// Legacy mode uses alpha = beta = 0. Corrected mode needs dim X = 1.
SufficientResult sufficient_condition(const DCProblem& problem, const SufficientRequest& request,
                                      std::span<const RationalVector> points);

SufficientResult sufficient_condition(const DCProblem& problem, const SufficientRequest& request,
                                      const NeighborhoodSpec& u, std::size_t points_per_axis);

// ---- Necessary conditions ---------------------------------------------------

struct NecessaryResult {
    bool found = false;
    std::optional<MultiplierCertificate> certificate;
    std::optional<LinearOperator> t;
    std::optional<LinearOperator> l;
    /// Mechanized reasoning behind an infeasible verdict.
    std::vector<std::string> trace;
    std::vector<std::string> warnings;
};

struct NecessaryRequest {
    std::vector<LinearOperator> candidates_t;
    std::vector<LinearOperator> candidates_l;
    Target target = Target::Weak;
    Mode mode = Mode::Corrected;
};

/// Searches (T, L) candidates for (y*, z*) in K* x D*, not both zero, with
/// (y* o F + z* o H)(x) - (y* o F + z* o H)(xbar) + <y*, eps>
///     >= <y*, T(x - xbar)> + <z*, L(x - xbar)>
/// on the points of U ∩ C. Legacy mode adds <z*, H(xbar) - S(xbar)> = 0;
/// Proper restricts y* to (K*)° ∪ {0}.
NecessaryResult necessary_condition(const DCProblem& problem, const NecessaryRequest& request,
                                    std::span<const RationalVector> points);

NecessaryResult necessary_condition(const DCProblem& problem, const NecessaryRequest& request,
                                    const NeighborhoodSpec& u, std::size_t points_per_axis);

/// Jacobian of the map's polynomial part at xbar, used as the default
/// singleton candidate list.
std::vector<LinearOperator> gradient_candidates(const VectorMap& map, const RationalVector& xbar);

} // namespace dcvopt
