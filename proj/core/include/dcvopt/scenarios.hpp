#pragma once

#include "dcvopt/dissipativity.hpp"
#include "dcvopt/multipliers.hpp"
#include "dcvopt/pareto.hpp"
#include "dcvopt/problem_file.hpp"
#include "dcvopt/report.hpp"
#include "dcvopt/subdifferential.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dcvopt {

/// Ω = {x in C : H(x) - S(x) in -D} sampled on the domain grid.
struct OmegaCheck {
    std::size_t grid_points = 0;
    std::size_t feasible_points = 0;
    std::optional<RationalVector> first_infeasible;
    /// Every grid point of C is feasible.
    bool equals_c() const noexcept { return !first_infeasible; }
};

OmegaCheck check_omega(const DCProblem& problem, std::size_t points_per_axis);

struct NamedConvexity {
    std::string map;
    bool convexlike = false;
    ConvexityVerdict verdict;
};

struct NamedDissipativity {
    std::string field;
    DissipativityVerdict verdict;
};

struct ScenarioResult {
    std::string name;
    ProblemFile file;
    OmegaCheck omega;
    std::vector<NamedConvexity> convexity;
    /// Claimed subgradients that the grid refutes.
    std::vector<std::pair<std::string, SubdiffVerdict>> subdifferentials;
    std::vector<NamedDissipativity> dissipativity;
    std::optional<SufficientResult> legacy_sufficient;
    MinimalityVerdict weak_min;
    std::optional<SufficientResult> corrected_sufficient;
    std::optional<NecessaryResult> legacy_necessary;
    std::optional<NecessaryResult> corrected_necessary;
    Report report;
};

struct ScenarioOverrides {
    std::optional<std::size_t> grid;
    std::optional<Rational> radius;
};

std::vector<std::string> scenario_names();

/// Text of the shipped problem file for a scenario.
std::string_view scenario_source(std::string_view name);

/// Runs example-3-1 or example-4-1. Throws Error for unknown names.
ScenarioResult run_scenario(std::string_view name, const ScenarioOverrides& overrides = {});

// Report entry builders shared with the command-line tool.
ReportEntry omega_entry(const OmegaCheck& omega, std::size_t grid);
ReportEntry convexity_entry(const NamedConvexity& c, std::size_t grid);
ReportEntry dissipativity_entry(const NamedDissipativity& d);
ReportEntry minimality_entry(std::string check, const MinimalityVerdict& v, const Rational& radius,
                             std::size_t grid);
ReportEntry sufficient_entry(std::string check, const SufficientResult& r, const Rational& radius,
                             std::size_t grid);
ReportEntry necessary_entry(std::string check, const NecessaryResult& r, const Rational& radius,
                            std::size_t grid);
ReportEntry subdiff_entry(std::string check, const SubdiffVerdict& v);
ReportEntry alternative_entry(const AlternativeResult& r, std::size_t grid);
void add_certificate(ReportEntry& entry, const MultiplierCertificate& cert);

} // namespace dcvopt
