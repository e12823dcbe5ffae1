#include "dcvopt/scenarios.hpp"

namespace dcvopt {

namespace detail {
extern const std::string_view kExample31Source;
extern const std::string_view kExample41Source;
} // namespace detail

OmegaCheck check_omega(const DCProblem& problem, std::size_t points_per_axis)
{
    OmegaCheck out;
    for (const auto& x : domain_grid(problem, points_per_axis)) {
        ++out.grid_points;
        if (feasible_contains(problem, x))
            ++out.feasible_points;
        else if (!out.first_infeasible)
            out.first_infeasible = x;
    }
    return out;
}

// ---- Report entries ----------------------------------------------------------

void add_certificate(ReportEntry& entry, const MultiplierCertificate& cert)
{
    entry.vector("ystar", cert.ystar).vector("zstar", cert.zstar);
    entry.text("reverified", cert.reverify() ? "true" : "false");
}

ReportEntry omega_entry(const OmegaCheck& omega, std::size_t grid)
{
    ReportEntry e{"omega", omega.equals_c() ? "CertifiedOnGrid" : "Falsified", {}, {}, {}};
    e.number("grid", grid).number("grid_points", omega.grid_points).number("feasible_points", omega.feasible_points);
    if (omega.first_infeasible)
        e.vector("first_infeasible", *omega.first_infeasible);
    else
        e.notes.push_back("every grid point of C is feasible: Omega = C on the grid");
    return e;
}

ReportEntry convexity_entry(const NamedConvexity& c, std::size_t grid)
{
    const std::string kind = c.convexlike ? "convexlike" : "convexity";
    ReportEntry e{kind + " " + c.map, c.verdict.falsified ? "Falsified" : "NotFalsified", {}, {}, {}};
    e.number("grid", grid);
    if (c.verdict.witness) {
        const auto& w = *c.verdict.witness;
        e.vector("x1", w.x1).vector("x2", w.x2).number("lambda", w.lambda);
        if (!c.convexlike)
            e.flags.push_back(c.map + " is claimed cone-convex but the inequality fails at (x1, x2, lambda) = ("
                              + (w.x1.dim() == 1 ? to_string(w.x1[0]) : w.x1.str()) + ", "
                              + (w.x2.dim() == 1 ? to_string(w.x2[0]) : w.x2.str()) + ", " + to_string(w.lambda)
                              + ")");
    }
    return e;
}

ReportEntry dissipativity_entry(const NamedDissipativity& d)
{
    ReportEntry e{"dissipativity " + d.field, d.verdict.falsified ? "Falsified" : "NotFalsified", {}, {}, {}};
    for (const auto& t : d.verdict.traces) {
        std::string line = "eps = " + t.eps.str() + ": ";
        line += t.accepted_radius ? "accepted at radius " + to_string(*t.accepted_radius)
                                  : "no radius accepted (" + std::to_string(t.attempts.size()) + " tried)";
        e.notes.push_back(line);
    }
    if (d.verdict.failing_eps)
        e.vector("failing_eps", *d.verdict.failing_eps);
    if (d.verdict.witness)
        e.vector("witness", *d.verdict.witness);
    return e;
}

namespace {

const char* status_name(MinimalityStatus s)
{
    switch (s) {
    case MinimalityStatus::CertifiedOnGrid:
        return "CertifiedOnGrid";
    case MinimalityStatus::Falsified:
        return "Falsified";
    case MinimalityStatus::NotCertified:
        return "NotCertified";
    }
    return "?";
}

} // namespace

ReportEntry minimality_entry(std::string check, const MinimalityVerdict& v, const Rational& radius,
                             std::size_t grid)
{
    ReportEntry e{std::move(check), status_name(v.status), {}, {}, {}};
    e.number("radius", radius).number("grid", grid);
    e.number("points_checked", v.points_checked).number("feasible_points", v.feasible_points);
    if (v.witness)
        e.vector("witness", *v.witness);
    if (v.gap)
        e.vector("gap", *v.gap);
    if (v.shear)
        e.number("shear", *v.shear);
    return e;
}

ReportEntry sufficient_entry(std::string check, const SufficientResult& r, const Rational& radius,
                             std::size_t grid)
{
    ReportEntry e{std::move(check), r.all_certified ? "CertifiedOnGrid" : "FailedFor", {}, r.warnings, {}};
    e.number("radius", radius).number("grid", grid).number("cases", r.cases.size());
    const SufficientCase* shown = r.failed_for ? &*r.failed_for : (r.cases.empty() ? nullptr : &r.cases.front());
    if (shown) {
        e.text("T", shown->t.str()).text("L", shown->l.str());
        if (shown->correction)
            e.vector("alpha", shown->correction->alpha()).vector("beta", shown->correction->beta());
        if (shown->certificate)
            add_certificate(e, *shown->certificate);
    }
    if (r.failed_for)
        e.notes.push_back("no (y*, z*) satisfies the grid system for this case");
    return e;
}

ReportEntry necessary_entry(std::string check, const NecessaryResult& r, const Rational& radius,
                            std::size_t grid)
{
    ReportEntry e{std::move(check), r.found ? "MultipliersFound" : "InfeasibleOnGrid", {}, {}, {}};
    e.number("radius", radius).number("grid", grid);
    if (r.found) {
        e.text("T", r.t->str()).text("L", r.l->str());
        add_certificate(e, *r.certificate);
    }
    e.notes = r.trace;
    e.notes.insert(e.notes.end(), r.warnings.begin(), r.warnings.end());
    return e;
}

ReportEntry subdiff_entry(std::string check, const SubdiffVerdict& v)
{
    ReportEntry e{std::move(check), v.certified() ? "CertifiedOnGrid" : "Falsified", {}, {}, {}};
    e.number("grid_points", v.grid_size);
    if (v.witness)
        e.vector("witness", *v.witness);
    return e;
}

ReportEntry alternative_entry(const AlternativeResult& r, std::size_t grid)
{
    const char* status = r.kind == AlternativeKind::SolutionExists ? "SolutionExists"
                       : r.kind == AlternativeKind::Multipliers    ? "Multipliers"
                                                                   : "GridGap";
    ReportEntry e{"alternative", status, {}, r.warnings, {}};
    e.number("grid", grid);
    if (r.solution)
        e.vector("solution", *r.solution);
    if (r.certificate)
        add_certificate(e, *r.certificate);
    return e;
}

// ---- Scenarios ---------------------------------------------------------------

std::vector<std::string> scenario_names()
{
    return {"example-3-1", "example-4-1"};
}

std::string_view scenario_source(std::string_view name)
{
    if (name == "example-3-1")
        return detail::kExample31Source;
    if (name == "example-4-1")
        return detail::kExample41Source;
    throw Error("unknown scenario '" + std::string(name) + "' (known: example-3-1, example-4-1)");
}

namespace {

std::vector<LinearOperator> or_gradient(const std::vector<LinearOperator>& given, const VectorMap& map,
                                        const RationalVector& xbar)
{
    return given.empty() ? gradient_candidates(map, xbar) : given;
}

std::vector<CorrectionPair> corrections_of(const ProblemFile& f)
{
    std::vector<CorrectionPair> out;
    for (const auto& [a, b] : f.options.corrections)
        out.emplace_back(a, b, f.problem.K, f.problem.D);
    return out;
}

void convexity_section(ScenarioResult& s, bool with_convexlike)
{
    const DCProblem& p = s.file.problem;
    const std::size_t grid = s.file.options.grid;
    const GridSpec spec(p.C, grid);
    const auto& lambdas = s.file.options.lambdas;
    const std::pair<const char*, std::pair<const VectorMap*, const PolyhedralCone*>> maps[] = {
        {"F", {&p.F, &p.K}}, {"G", {&p.G, &p.K}}, {"H", {&p.H, &p.D}}, {"S", {&p.S, &p.D}}};
    for (const auto& [name, mc] : maps) {
        NamedConvexity c{name, false, check_cone_convex(*mc.first, *mc.second, spec, lambdas)};
        s.report.results.push_back(convexity_entry(c, grid));
        s.convexity.push_back(c);
        if (with_convexlike && c.verdict.falsified) {
            NamedConvexity cl{name, true, check_convexlike(*mc.first, *mc.second, spec, lambdas)};
            ReportEntry e = convexity_entry(cl, grid);
            if (!cl.verdict.falsified && std::string_view(name) == "F")
                e.notes.push_back("F is still K-convexlike on the grid, which is all the corrected necessary "
                                  "condition needs");
            s.report.results.push_back(std::move(e));
            s.convexity.push_back(cl);
        }
    }
}

void run_example_3_1(ScenarioResult& s)
{
    const DCProblem& p = s.file.problem;
    const auto& o = s.file.options;
    const NeighborhoodSpec u(o.radius);

    s.omega = check_omega(p, o.grid);
    s.report.results.push_back(omega_entry(s.omega, o.grid));

    convexity_section(s, false);

    const std::pair<const char*, std::pair<const VectorMap*, const PolyhedralCone*>> fields[] = {
        {"dG", {&p.G, &p.K}}, {"dS", {&p.S, &p.D}}};
    for (const auto& [name, mc] : fields) {
        NamedDissipativity d{name, check_approx_pseudo_dissipative(OperatorField::jacobian_of(*mc.first), p.xbar,
                                                                   *mc.second)};
        s.report.results.push_back(dissipativity_entry(d));
        s.dissipativity.push_back(std::move(d));
    }

    SufficientRequest legacy{or_gradient(s.file.candidates_t, p.G, p.xbar),
                             or_gradient(s.file.candidates_l, p.S, p.xbar), {}, Target::Weak, Mode::LegacyGL};
    s.legacy_sufficient = sufficient_condition(p, legacy, u, o.grid);
    ReportEntry le = sufficient_entry("legacy sufficient", *s.legacy_sufficient, o.radius, o.grid);
    if (s.legacy_sufficient->all_certified) {
        const auto& cert = *s.legacy_sufficient->cases.front().certificate;
        if (cert.zstar.is_zero())
            le.notes.push_back("complementarity with H(xbar)-S(xbar) in -int D leaves only the z* = 0 branch");
    }
    s.report.results.push_back(std::move(le));

    s.weak_min = check_eps_weak_local_min(p, u, o.grid);
    ReportEntry we = minimality_entry("weak-min", s.weak_min, o.radius, o.grid);
    if (s.weak_min.status == MinimalityStatus::Falsified && s.legacy_sufficient->all_certified)
        we.flags.push_back("legacy sufficient hypotheses certified but xbar is not eps-weak locally minimal");
    s.report.results.push_back(std::move(we));

    SufficientRequest corrected = legacy;
    corrected.mode = Mode::Corrected;
    corrected.corrections = corrections_of(s.file);
    s.corrected_sufficient = sufficient_condition(p, corrected, u, o.grid);
    s.report.results.push_back(sufficient_entry("corrected sufficient", *s.corrected_sufficient, o.radius, o.grid));
}

void run_example_4_1(ScenarioResult& s)
{
    const DCProblem& p = s.file.problem;
    const auto& o = s.file.options;
    const NeighborhoodSpec u(o.radius);

    s.omega = check_omega(p, o.grid);
    s.report.results.push_back(omega_entry(s.omega, o.grid));

    convexity_section(s, true);

    // Claimed strong subdifferential of G at xbar is {0}.
    const LinearOperator zero(p.y_dim, p.x_dim);
    const SubdiffVerdict dg = strong_subdiff_contains(p.G, p.K, p.xbar, zero, GridSpec(p.C, o.grid));
    s.subdifferentials.emplace_back("dG(xbar) contains 0", dg);
    ReportEntry se = subdiff_entry("subdiff G", dg);
    se.text("T", zero.str());
    if (!dg.certified())
        se.flags.push_back("0 is claimed to lie in dG(xbar) but G(x) - G(xbar) leaves K at the witness");
    s.report.results.push_back(std::move(se));

    s.weak_min = check_eps_weak_local_min(p, u, o.grid);
    s.report.results.push_back(minimality_entry("weak-min", s.weak_min, o.radius, o.grid));

    NecessaryRequest legacy{or_gradient(s.file.candidates_t, p.G, p.xbar),
                            or_gradient(s.file.candidates_l, p.H, p.xbar), Target::Weak, Mode::LegacyGL};
    s.legacy_necessary = necessary_condition(p, legacy, u, o.grid);
    ReportEntry ln = necessary_entry("legacy necessary", *s.legacy_necessary, o.radius, o.grid);
    if (!s.legacy_necessary->found && s.weak_min.certified())
        ln.flags.push_back("xbar is eps-weak locally minimal on the grid but the legacy necessary condition fails");
    s.report.results.push_back(std::move(ln));

    NecessaryRequest corrected = legacy;
    corrected.mode = Mode::Corrected;
    s.corrected_necessary = necessary_condition(p, corrected, u, o.grid);
    s.report.results.push_back(necessary_entry("corrected necessary", *s.corrected_necessary, o.radius, o.grid));
}

} // namespace

ScenarioResult run_scenario(std::string_view name, const ScenarioOverrides& overrides)
{
    const std::string_view source = scenario_source(name);
    ScenarioResult s{std::string(name), parse_problem(source), {}, {}, {}, {}, std::nullopt, {}, std::nullopt,
                     std::nullopt, std::nullopt, {}};
    if (overrides.grid)
        s.file.options.grid = *overrides.grid;
    if (overrides.radius)
        s.file.options.radius = NeighborhoodSpec(*overrides.radius).radius;
    s.report.command = "scenario " + s.name;
    if (name == "example-3-1")
        run_example_3_1(s);
    else
        run_example_4_1(s);
    return s;
}

} // namespace dcvopt
