#include "dcvopt/multipliers.hpp"

#include <set>

namespace dcvopt {

const char* to_string(Target t)
{
    return t == Target::Weak ? "weak" : "proper";
}

const char* to_string(Mode m)
{
    return m == Mode::Corrected ? "corrected" : "legacy-gl";
}

bool MultiplierCertificate::reverify() const
{
    RationalVector v(ystar.dim() + zstar.dim());
    for (std::size_t i = 0; i < ystar.dim(); ++i)
        v[i] = ystar[i];
    for (std::size_t i = 0; i < zstar.dim(); ++i)
        v[ystar.dim() + i] = zstar[i];
    return system.satisfied_by(v) && system.residuals(v) == residuals
        && !(ystar.is_zero() && zstar.is_zero());
}

CorrectionPair::CorrectionPair(RationalVector alpha, RationalVector beta, const PolyhedralCone& k,
                               const PolyhedralCone& d)
    : alpha_(std::move(alpha)), beta_(std::move(beta))
{
    if (!cone_contains(k, alpha_, true))
        throw PreconditionViolation("alpha " + alpha_.str() + " is not interior to K");
    if (!cone_contains(d, beta_, true))
        throw PreconditionViolation("beta " + beta_.str() + " is not interior to D");
}

RationalVector interior_direction(const PolyhedralCone& cone)
{
    RationalVector w = RationalVector::constant(cone.dim(), 1);
    if (cone_contains(cone, w, true))
        return w;
    w = RationalVector::zero(cone.dim());
    for (const auto& g : cone.generators())
        w += g;
    return w;
}

std::vector<CorrectionPair> default_corrections(const PolyhedralCone& k, const PolyhedralCone& d)
{
    const RationalVector a = interior_direction(k);
    const RationalVector b = interior_direction(d);
    std::vector<CorrectionPair> out;
    Rational scale = 1;
    for (int i = 0; i <= 3; ++i, scale /= 2)
        out.emplace_back(scale * a, scale * b, k, d);
    scale = 1;
    for (int i = 1; i <= 3; ++i) {
        scale *= 2;
        out.emplace_back(scale * a, scale * b, k, d);
    }
    return out;
}

std::vector<LinearOperator> gradient_candidates(const VectorMap& map, const RationalVector& xbar)
{
    return {map.polynomial_jacobian(xbar)};
}

namespace {

std::vector<std::string> multiplier_names(std::size_t y_dim, std::size_t z_dim)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < y_dim; ++i)
        names.push_back("y*" + std::to_string(i + 1));
    for (std::size_t i = 0; i < z_dim; ++i)
        names.push_back("z*" + std::to_string(i + 1));
    return names;
}

RationalVector sum_of(const std::vector<RationalVector>& vs, std::size_t dim)
{
    RationalVector s(dim);
    for (const auto& v : vs)
        s += v;
    return s;
}

// Linear system in the unknowns (y*, z*).
class MultiplierSystem {
public:
    MultiplierSystem(std::size_t y_dim, std::size_t z_dim)
        : y_dim_(y_dim), z_dim_(z_dim), lfp_(multiplier_names(y_dim, z_dim))
    {
    }

    RationalVector pack(const RationalVector& ycoef, const RationalVector& zcoef) const
    {
        RationalVector v(y_dim_ + z_dim_);
        for (std::size_t i = 0; i < y_dim_; ++i)
            v[i] = ycoef[i];
        for (std::size_t i = 0; i < z_dim_; ++i)
            v[y_dim_ + i] = zcoef[i];
        return v;
    }

    void add(const RationalVector& ycoef, const RationalVector& zcoef, Relation rel, Rational rhs, std::string label)
    {
        lfp_.add(pack(ycoef, zcoef), rel, std::move(rhs), std::move(label));
    }

    void dual_cones(const PolyhedralCone& k, const PolyhedralCone& d)
    {
        const RationalVector y0(y_dim_), z0(z_dim_);
        for (const auto& g : k.generators())
            add(g, z0, Relation::GreaterEqual, 0, "y* in K*: <y*," + g.str() + "> >= 0");
        for (const auto& g : d.generators())
            add(y0, g, Relation::GreaterEqual, 0, "z* in D*: <z*," + g.str() + "> >= 0");
    }

    void normalization(const PolyhedralCone& k, const PolyhedralCone& d)
    {
        add(sum_of(k.generators(), y_dim_), sum_of(d.generators(), z_dim_), Relation::Equal, 1, "normalization");
    }

    void y_nontrivial(const PolyhedralCone& k)
    {
        add(sum_of(k.generators(), y_dim_), RationalVector(z_dim_), Relation::Greater, 0, "y* != 0");
    }

    void y_strict_polar(const PolyhedralCone& k)
    {
        for (const auto& g : k.generators())
            if (!in_linearity(k, g))
                add(g, RationalVector(z_dim_), Relation::Greater, 0, "y* in (K*)°: <y*," + g.str() + "> > 0");
    }

    void y_zero()
    {
        for (std::size_t i = 0; i < y_dim_; ++i)
            add(RationalVector::unit(y_dim_, i), RationalVector(z_dim_), Relation::Equal, 0, "y* = 0");
    }

    void z_zero()
    {
        for (std::size_t i = 0; i < z_dim_; ++i)
            add(RationalVector(y_dim_), RationalVector::unit(z_dim_, i), Relation::Equal, 0, "z* = 0");
    }

    void complementarity(const RationalVector& slack)
    {
        add(RationalVector(y_dim_), slack, Relation::Equal, 0, "complementarity <z*,H(xbar)-S(xbar)> = 0");
    }

    /// Pointwise inequality <y*, ycoef> + <z*, zcoef> >= 0. Identical rows and
    /// trivially true zero rows are skipped.
    void point(const RationalVector& ycoef, const RationalVector& zcoef, const RationalVector& x)
    {
        RationalVector row = pack(ycoef, zcoef);
        if (row.is_zero() || !seen_.insert(row).second)
            return;
        row_points_.resize(lfp_.constraints().size());
        row_points_.push_back(x);
        lfp_.add(std::move(row), Relation::GreaterEqual, 0, "x = " + x.str());
    }

    /// Point behind constraint row i, if it is a pointwise row.
    std::optional<RationalVector> point_of(std::size_t i) const
    {
        return i < row_points_.size() ? row_points_[i] : std::nullopt;
    }

    std::optional<MultiplierCertificate> solve(const std::string& mode, FeasibilityResult* raw = nullptr) const
    {
        const FeasibilityResult r = solve_feasibility(lfp_);
        if (raw)
            *raw = r;
        if (!r.feasible)
            return std::nullopt;
        MultiplierCertificate cert{RationalVector(y_dim_), RationalVector(z_dim_), lfp_, lfp_.residuals(r.assignment),
                                   mode};
        for (std::size_t i = 0; i < y_dim_; ++i)
            cert.ystar[i] = r.assignment[i];
        for (std::size_t i = 0; i < z_dim_; ++i)
            cert.zstar[i] = r.assignment[y_dim_ + i];
        return cert;
    }

private:
    std::size_t y_dim_;
    std::size_t z_dim_;
    LinearFeasibilityProblem lfp_;
    std::set<RationalVector> seen_;
    std::vector<std::optional<RationalVector>> row_points_;
};

// Convex combination of the pointwise rows weighted by a Farkas certificate.
std::optional<RationalVector> farkas_point(const MultiplierSystem& sys, const std::vector<Rational>& u)
{
    std::optional<RationalVector> sum;
    Rational total = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const auto x = sys.point_of(i);
        if (!x || u[i] == 0)
            continue;
        sum = sum ? *sum + u[i] * *x : u[i] * *x;
        total += u[i];
    }
    if (!sum || total <= 0)
        return std::nullopt;
    return (1 / total) * *sum;
}

void check_candidates(const DCProblem& p, const std::vector<LinearOperator>& ts,
                      const std::vector<LinearOperator>& ls)
{
    if (ts.empty() || ls.empty())
        throw PreconditionViolation("candidate lists must be nonempty");
    for (const auto& t : ts)
        if (t.rows() != p.y_dim || t.cols() != p.x_dim)
            throw DimensionMismatch("T candidate must be dim Y x dim X");
    for (const auto& l : ls)
        if (l.rows() != p.z_dim || l.cols() != p.x_dim)
            throw DimensionMismatch("L candidate must be dim Z x dim X");
}

} // namespace

// ---- Alternative -------------------------------------------------------------

AlternativeResult alternative_system(const VectorMap& f, const VectorMap& g, const PolyhedralCone& k,
                                     const PolyhedralCone& d, std::span<const RationalVector> points)
{
    if (f.out_dim() != k.dim() || g.out_dim() != d.dim() || f.in_dim() != g.in_dim())
        throw DimensionMismatch("alternative system: maps and cones disagree in dimension");
    AlternativeResult result;
    if (check_convexlike(f, k, points).falsified)
        result.warnings.push_back("F is not K-convexlike on the grid; the alternative may fail");
    if (check_convexlike(g, d, points).falsified)
        result.warnings.push_back("G is not D-convexlike on the grid; the alternative may fail");

    std::vector<std::pair<RationalVector, RationalVector>> images;
    for (const auto& x : points) {
        auto fx = evaluate(f, x);
        auto gx = evaluate(g, x);
        if (cone_contains(k, -fx, true) && cone_contains(d, -gx, true)) {
            result.kind = AlternativeKind::SolutionExists;
            result.solution = x;
            return result;
        }
        images.emplace_back(std::move(fx), std::move(gx));
    }

    MultiplierSystem sys(k.dim(), d.dim());
    sys.dual_cones(k, d);
    sys.normalization(k, d);
    for (std::size_t i = 0; i < points.size(); ++i)
        sys.point(images[i].first, images[i].second, points[i]);
    FeasibilityResult raw;
    if (auto cert = sys.solve("alternative", &raw)) {
        result.kind = AlternativeKind::Multipliers;
        result.certificate = std::move(cert);
        return result;
    }
    // The Farkas weights put a convex combination of grid images in
    // -int (K x D); for convex maps the same combination of the points solves
    // the strict system between grid nodes.
    if (const auto x = farkas_point(sys, raw.farkas)) {
        if (cone_contains(k, -evaluate(f, *x), true) && cone_contains(d, -evaluate(g, *x), true)) {
            result.kind = AlternativeKind::SolutionExists;
            result.solution = *x;
            return result;
        }
    }
    result.kind = AlternativeKind::GridGap;
    result.warnings.push_back("no strict solution and no multipliers on this grid (grid gap)");
    return result;
}

// ---- Sufficient ----------------------------------------------------------------

SufficientResult sufficient_condition(const DCProblem& problem, const SufficientRequest& request,
                                      std::span<const RationalVector> points)
{
    problem.validate();
    check_candidates(problem, request.candidates_t, request.candidates_l);
    const bool corrected = request.mode == Mode::Corrected;
    if (corrected && problem.x_dim != 1)
        throw PreconditionViolation("corrected mode is defined only for dim X = 1, where T - alpha is well-typed");

    const std::vector<CorrectionPair> corrections =
        !corrected ? std::vector<CorrectionPair>{}
                   : (request.corrections.empty() ? default_corrections(problem.K, problem.D) : request.corrections);
    for (const auto& c : corrections)
        if (c.alpha().dim() != problem.y_dim || c.beta().dim() != problem.z_dim)
            throw DimensionMismatch("correction pair has wrong dimensions");

    SufficientResult result;
    if (!feasible_contains(problem, problem.xbar))
        result.warnings.push_back("xbar is not feasible");

    const auto& xb = problem.xbar;
    const RationalVector f_bar = evaluate(problem.F, xb);
    const RationalVector h_bar = evaluate(problem.H, xb);
    const RationalVector slack_bar = h_bar - evaluate(problem.S, xb);

    auto run_case = [&](const LinearOperator& t, const LinearOperator& l, const CorrectionPair* corr) {
        MultiplierSystem sys(problem.y_dim, problem.z_dim);
        sys.dual_cones(problem.K, problem.D);
        sys.normalization(problem.K, problem.D);
        sys.complementarity(slack_bar);
        if (request.target == Target::Weak)
            sys.y_nontrivial(problem.K);
        else
            sys.y_strict_polar(problem.K);
        for (const auto& x : points) {
            const RationalVector step = x - xb;
            RationalVector ycoef = evaluate(problem.F, x) - f_bar - t.apply(step);
            RationalVector zcoef = evaluate(problem.H, x) - h_bar - l.apply(step);
            if (corr) {
                ycoef += step[0] * corr->alpha();
                zcoef += step[0] * corr->beta();
            }
            sys.point(ycoef, zcoef, x);
        }
        SufficientCase c{t, l, corr ? std::optional<CorrectionPair>(*corr) : std::nullopt,
                         sys.solve(std::string("sufficient/") + to_string(request.mode) + "/" + to_string(request.target))};
        return c;
    };

    for (const auto& t : request.candidates_t) {
        for (const auto& l : request.candidates_l) {
            std::vector<const CorrectionPair*> samples{nullptr};
            if (corrected) {
                samples.clear();
                for (const auto& corr : corrections)
                    samples.push_back(&corr);
            }
            for (const CorrectionPair* corr : samples) {
                result.cases.push_back(run_case(t, l, corr));
                if (!result.cases.back().certificate) {
                    result.failed_for = result.cases.back();
                    return result;
                }
            }
        }
    }
    result.all_certified = true;
    return result;
}

SufficientResult sufficient_condition(const DCProblem& problem, const SufficientRequest& request,
                                      const NeighborhoodSpec& u, std::size_t points_per_axis)
{
    const auto pts = neighborhood_grid(problem, u.radius, points_per_axis);
    return sufficient_condition(problem, request, pts);
}

// ---- Necessary -----------------------------------------------------------------

NecessaryResult necessary_condition(const DCProblem& problem, const NecessaryRequest& request,
                                    std::span<const RationalVector> points)
{
    problem.validate();
    check_candidates(problem, request.candidates_t, request.candidates_l);
    NecessaryResult result;

    const auto weak = check_eps_weak_local_min(problem, points);
    if (!weak.certified())
        result.warnings.push_back("xbar is not certified eps-weak locally minimal on this grid");
    if (check_convexlike(problem.F, problem.K, points).falsified)
        result.warnings.push_back("F is not K-convexlike on the grid");
    if (check_convexlike(problem.H, problem.D, points).falsified)
        result.warnings.push_back("H is not D-convexlike on the grid");

    const auto& xb = problem.xbar;
    const RationalVector f_bar = evaluate(problem.F, xb);
    const RationalVector h_bar = evaluate(problem.H, xb);
    const RationalVector slack_bar = h_bar - evaluate(problem.S, xb);
    const bool legacy = request.mode == Mode::LegacyGL;
    const std::string mode_tag = std::string("necessary/") + to_string(request.mode) + "/" + to_string(request.target);

    // Multipliers with y* != 0 are preferred; y* = 0 only when nothing else fits.
    enum class Branch { NonzeroY, Any, StrictPolar, ZeroY };
    std::vector<Branch> branches;
    if (request.target == Target::Weak)
        branches = {Branch::NonzeroY, Branch::Any};
    else
        branches = {Branch::StrictPolar, Branch::ZeroY};

    auto f_tilde = [&](const LinearOperator& t, const RationalVector& x) {
        return evaluate(problem.F, x) - f_bar - t.apply(x - xb) + problem.eps;
    };

    for (const auto& t : request.candidates_t) {
        for (const auto& l : request.candidates_l) {
            for (Branch br : branches) {
                MultiplierSystem sys(problem.y_dim, problem.z_dim);
                sys.dual_cones(problem.K, problem.D);
                sys.normalization(problem.K, problem.D);
                if (legacy)
                    sys.complementarity(slack_bar);
                if (br == Branch::NonzeroY)
                    sys.y_nontrivial(problem.K);
                else if (br == Branch::StrictPolar)
                    sys.y_strict_polar(problem.K);
                else if (br == Branch::ZeroY)
                    sys.y_zero();
                for (const auto& x : points)
                    sys.point(f_tilde(t, x), evaluate(problem.H, x) - h_bar - l.apply(x - xb), x);
                if (auto cert = sys.solve(mode_tag)) {
                    result.found = true;
                    result.certificate = std::move(cert);
                    result.t = t;
                    result.l = l;
                    return result;
                }
            }
        }
    }

    // Explain the infeasibility.
    if (legacy && cone_contains(problem.D, -slack_bar, true)) {
        const std::string c = slack_bar.dim() == 1 ? to_string(slack_bar[0]) : slack_bar.str();
        result.trace.push_back("complementarity <z*," + c + "> = 0 => z* = 0 (H(xbar)-S(xbar) = " + c
                               + " lies in -int D)");
        for (const auto& t : request.candidates_t) {
            MultiplierSystem sys(problem.y_dim, problem.z_dim);
            sys.dual_cones(problem.K, problem.D);
            sys.z_zero();
            sys.y_nontrivial(problem.K);
            for (const auto& x : points)
                sys.point(f_tilde(t, x), RationalVector(problem.z_dim), x);
            if (sys.solve(mode_tag))
                continue;
            std::string line = "with z* = 0 and T = " + t.str() + ": no y* in K*\\{0} satisfies the grid constraints";
            for (const auto& x : points) {
                const RationalVector v = f_tilde(t, x);
                if (cone_contains(problem.K, -v, true)) {
                    line += "; at x = " + x.str() + ", F(x)-F(xbar)-T(x-xbar)+eps = " + v.str()
                          + " lies in -int K, so <y*,.> < 0 for every y* in K*\\{0}";
                    break;
                }
            }
            result.trace.push_back(line + " => contradiction");
        }
    } else {
        result.trace.push_back("no multipliers (y*, z*) exist for any candidate pair on "
                               + std::to_string(points.size()) + " grid points");
    }
    return result;
}

NecessaryResult necessary_condition(const DCProblem& problem, const NecessaryRequest& request,
                                    const NeighborhoodSpec& u, std::size_t points_per_axis)
{
    const auto pts = neighborhood_grid(problem, u.radius, points_per_axis);
    return necessary_condition(problem, request, pts);
}

} // namespace dcvopt
