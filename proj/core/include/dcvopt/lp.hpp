#pragma once

#include "dcvopt/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dcvopt {

enum class Relation { GreaterEqual, Equal, Greater };

const char* relation_symbol(Relation r);

struct LinearConstraint {
    RationalVector coeffs;
    Relation relation = Relation::GreaterEqual;
    Rational rhs;
    std::string label;
};

/// System of linear relations over free rational unknowns. Strict rows are
/// solved by maximizing one shared slack s (capped at 1) in
/// <a, v> - s >= rhs; the system is feasible iff the optimum is positive.
class LinearFeasibilityProblem {
public:
    static constexpr std::size_t kMaxVariables = 8;

    explicit LinearFeasibilityProblem(std::vector<std::string> variable_names);

    std::size_t num_variables() const noexcept { return names_.size(); }
    const std::vector<std::string>& variable_names() const noexcept { return names_; }
    const std::vector<LinearConstraint>& constraints() const noexcept { return constraints_; }

    void add(RationalVector coeffs, Relation relation, Rational rhs, std::string label = {});

    /// Exact residual <a, v> - rhs of every constraint.
    std::vector<Rational> residuals(const RationalVector& assignment) const;

    /// Every relation holds exactly at the assignment.
    bool satisfied_by(const RationalVector& assignment) const;

private:
    std::vector<std::string> names_;
    std::vector<LinearConstraint> constraints_;
};

struct FeasibilityResult {
    bool feasible = false;
    RationalVector assignment;
    /// Optimal shared slack when strict rows are present.
    std::optional<Rational> strict_margin;
    /// Farkas certificate of an infeasible system without strict rows: u with
    /// sum_i u_i a_i = 0, u_i >= 0 on inequality rows and sum_i u_i b_i > 0,
    /// indexed like constraints(). Checked exactly before it is returned.
    std::vector<Rational> farkas;
    std::size_t pivots = 0;
};

/// Deterministic exact two-phase simplex (Bland's rule).
FeasibilityResult solve_feasibility(const LinearFeasibilityProblem& lfp);

} // namespace dcvopt
