#include "dcvopt/scenarios.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace dcvopt;

struct Globals {
    std::string problem_path;
    std::optional<std::size_t> grid;
    std::string radius;
    std::string format = "text";
};

ProblemFile load(const Globals& g)
{
    if (g.problem_path.empty())
        throw Error("--problem <path> is required for check commands");
    ProblemFile f = load_problem(g.problem_path);
    if (g.grid)
        f.options.grid = *g.grid;
    if (!g.radius.empty())
        f.options.radius = NeighborhoodSpec(parse_rational(g.radius)).radius;
    return f;
}

const VectorMap& pick_map(const DCProblem& p, const std::string& name)
{
    if (name == "F")
        return p.F;
    if (name == "G")
        return p.G;
    if (name == "H")
        return p.H;
    return p.S;
}

const PolyhedralCone& cone_of(const DCProblem& p, const std::string& name)
{
    return name == "F" || name == "G" ? p.K : p.D;
}

Target parse_target(const std::string& s)
{
    return s == "proper" ? Target::Proper : Target::Weak;
}

Mode parse_mode(const std::string& s)
{
    return s == "legacy-gl" ? Mode::LegacyGL : Mode::Corrected;
}

std::vector<CorrectionPair> corrections_of(const ProblemFile& f)
{
    std::vector<CorrectionPair> out;
    for (const auto& [a, b] : f.options.corrections)
        out.emplace_back(a, b, f.problem.K, f.problem.D);
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact grid certification for DC vector optimization problems", "dcvcheck"};
    app.require_subcommand(1);

    Globals g;
    app.add_option("--problem", g.problem_path, "Problem file")->check(CLI::ExistingFile);
    app.add_option("--grid", g.grid, "Grid points per axis")->check(CLI::Range(2, 100000));
    app.add_option("--radius", g.radius, "Neighborhood radius (integer or p/q)");
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "machine"}));

    auto* check = app.add_subcommand("check", "Run one checker on a problem file");
    check->require_subcommand(1);
    check->fallthrough();

    auto* weak = check->add_subcommand("weak-min", "eps-weak local minimality of xbar");
    auto* proper = check->add_subcommand("proper-min", "eps-proper local minimality of xbar (Y = Q^2, K = Q^2_+)");

    std::string map_name = "G";
    std::string op_text;
    std::string eps_text;
    auto* subdiff = check->add_subcommand("subdiff", "Operator membership in the eps-subdifferential at xbar");
    subdiff->add_option("--map", map_name, "Map to test")->check(CLI::IsMember({"F", "G", "H", "S"}));
    subdiff->add_option("--operator", op_text, "Operator rows 'a, b; c, d' (default: Jacobian at xbar)");
    subdiff->add_option("--epsilon", eps_text, "Slack vector in the map's cone (default 0)");

    auto* dissip = check->add_subcommand("dissipative", "Approximate pseudo-dissipativity of a Jacobian field");
    dissip->add_option("--map", map_name, "Map whose Jacobian field is tested")
        ->check(CLI::IsMember({"F", "G", "H", "S"}));

    auto* alt = check->add_subcommand("alternative", "Convexlike alternative for (F, K) and (H, D) on C");

    std::string mode = "corrected";
    std::string target = "weak";
    auto* suff = check->add_subcommand("sufficient", "Multiplier sufficient condition");
    auto* nec = check->add_subcommand("necessary", "Multiplier necessary condition");
    for (auto* sub : {suff, nec}) {
        sub->add_option("--mode", mode, "Theorem form")->check(CLI::IsMember({"corrected", "legacy-gl"}));
        sub->add_option("--target", target, "Minimality notion")->check(CLI::IsMember({"weak", "proper"}));
    }
    for (auto* sub : {weak, proper, subdiff, dissip, alt, suff, nec})
        sub->fallthrough();

    std::string scenario_name;
    auto* scen = app.add_subcommand("scenario", "Run a built-in scenario");
    scen->add_option("name", scenario_name, "example-3-1 | example-4-1")->required();
    scen->fallthrough();

    CLI11_PARSE(app, argc, argv);

    std::string command = "dcvcheck";
    for (int i = 1; i < argc; ++i)
        command += std::string(" ") + argv[i];

    try {
        Report report;
        if (scen->parsed()) {
            ScenarioOverrides o;
            o.grid = g.grid;
            if (!g.radius.empty())
                o.radius = parse_rational(g.radius);
            report = run_scenario(scenario_name, o).report;
        } else {
            const ProblemFile f = load(g);
            const DCProblem& p = f.problem;
            const auto& opt = f.options;
            const NeighborhoodSpec u(opt.radius);
            if (weak->parsed()) {
                report.results.push_back(
                    minimality_entry("weak-min", check_eps_weak_local_min(p, u, opt.grid), opt.radius, opt.grid));
            } else if (proper->parsed()) {
                const auto v = check_eps_proper_local_min(p, u, DilationFamily(opt.dilation), opt.grid);
                report.results.push_back(minimality_entry("proper-min", v, opt.radius, opt.grid));
            } else if (subdiff->parsed()) {
                const VectorMap& m = pick_map(p, map_name);
                const LinearOperator t = op_text.empty() ? m.polynomial_jacobian(p.xbar) : parse_matrix(op_text);
                const RationalVector eps = eps_text.empty() ? RationalVector(m.out_dim()) : parse_vector(eps_text);
                const auto v = eps_subdiff_contains(m, cone_of(p, map_name), p.xbar, t, eps, GridSpec(p.C, opt.grid));
                ReportEntry e = subdiff_entry("subdiff " + map_name, v);
                e.text("T", t.str()).vector("eps", eps);
                report.results.push_back(std::move(e));
            } else if (dissip->parsed()) {
                NamedDissipativity d{"d" + map_name,
                                     check_approx_pseudo_dissipative(OperatorField::jacobian_of(pick_map(p, map_name)),
                                                                     p.xbar, cone_of(p, map_name))};
                report.results.push_back(dissipativity_entry(d));
            } else if (alt->parsed()) {
                const auto pts = domain_grid(p, opt.grid);
                report.results.push_back(alternative_entry(alternative_system(p.F, p.H, p.K, p.D, pts), opt.grid));
            } else if (suff->parsed()) {
                SufficientRequest req{f.candidates_t.empty() ? gradient_candidates(p.G, p.xbar) : f.candidates_t,
                                      f.candidates_l.empty() ? gradient_candidates(p.S, p.xbar) : f.candidates_l,
                                      corrections_of(f), parse_target(target), parse_mode(mode)};
                report.results.push_back(sufficient_entry("sufficient " + mode + " " + target,
                                                          sufficient_condition(p, req, u, opt.grid), opt.radius,
                                                          opt.grid));
            } else if (nec->parsed()) {
                NecessaryRequest req{f.candidates_t.empty() ? gradient_candidates(p.G, p.xbar) : f.candidates_t,
                                     f.candidates_l.empty() ? gradient_candidates(p.H, p.xbar) : f.candidates_l,
                                     parse_target(target), parse_mode(mode)};
                report.results.push_back(necessary_entry("necessary " + mode + " " + target,
                                                         necessary_condition(p, req, u, opt.grid), opt.radius,
                                                         opt.grid));
            }
        }
        report.command = command;
        std::cout << emit_report(report, g.format == "machine" ? ReportFormat::Machine : ReportFormat::Text);
    } catch (const Error& e) {
        std::cerr << "dcvcheck: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
