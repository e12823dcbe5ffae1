#include "dcvopt/dissipativity.hpp"

#include <algorithm>

namespace dcvopt {

OperatorField::OperatorField(std::size_t rows, std::size_t in_dim, std::vector<std::vector<Polynomial>> branches,
                             std::vector<Override> overrides)
    : rows_(rows), in_dim_(in_dim), branches_(std::move(branches)), overrides_(std::move(overrides))
{
    if (rows_ == 0 || in_dim_ == 0)
        throw Error("operator field dimensions must be positive");
    if (branches_.empty())
        throw Error("operator field needs at least one branch");
    for (const auto& b : branches_) {
        if (b.size() != rows_ * in_dim_)
            throw DimensionMismatch("operator field branch has wrong number of entries");
        for (const auto& p : b)
            if (p.in_dim() != in_dim_)
                throw DimensionMismatch("operator field entry has wrong input dimension");
    }
    for (const auto& o : overrides_) {
        if (o.point.dim() != in_dim_)
            throw DimensionMismatch("operator field override point has wrong dimension");
        if (o.operators.empty())
            throw Error("operator field override must list at least one operator");
        for (const auto& op : o.operators)
            if (op.rows() != rows_ || op.cols() != in_dim_)
                throw DimensionMismatch("operator field override has wrong shape");
    }
}

OperatorField OperatorField::constant(const LinearOperator& op)
{
    std::vector<Polynomial> entries;
    for (std::size_t r = 0; r < op.rows(); ++r)
        for (std::size_t c = 0; c < op.cols(); ++c)
            entries.push_back(Polynomial::constant(op.cols(), op(r, c)));
    return OperatorField(op.rows(), op.cols(), {std::move(entries)});
}

OperatorField OperatorField::jacobian_of(const VectorMap& map)
{
    std::vector<Polynomial> entries;
    for (std::size_t r = 0; r < map.out_dim(); ++r)
        for (std::size_t c = 0; c < map.in_dim(); ++c)
            entries.push_back(map.coords()[r].derivative(c));
    return OperatorField(map.out_dim(), map.in_dim(), {std::move(entries)});
}

std::vector<LinearOperator> OperatorField::at(const RationalVector& x) const
{
    if (x.dim() != in_dim_)
        throw DimensionMismatch("operator field queried at point of wrong dimension");
    for (const auto& o : overrides_)
        if (o.point == x)
            return o.operators;
    std::vector<LinearOperator> out;
    for (const auto& b : branches_) {
        LinearOperator op(rows_, in_dim_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < in_dim_; ++c)
                op(r, c) = b[r * in_dim_ + c](x);
        out.push_back(std::move(op));
    }
    return out;
}

OperatorField OperatorField::scaled(const Rational& s) const
{
    auto branches = branches_;
    for (auto& b : branches)
        for (auto& p : b)
            p *= s;
    auto overrides = overrides_;
    for (auto& o : overrides)
        for (auto& op : o.operators)
            op *= s;
    return OperatorField(rows_, in_dim_, std::move(branches), std::move(overrides));
}

std::vector<RationalVector> default_eps_samples(const PolyhedralCone& k)
{
    RationalVector base = RationalVector::constant(k.dim(), 1);
    if (!cone_contains(k, base, true)) {
        base = RationalVector::zero(k.dim());
        for (const auto& g : k.generators())
            base += g;
    }
    std::vector<RationalVector> out;
    Rational scale = 1;
    for (int i = 0; i <= 4; ++i, scale /= 2)
        out.push_back(scale * base);
    return out;
}

std::vector<Rational> default_radii()
{
    std::vector<Rational> out;
    Rational r = 1;
    for (int i = 0; i <= 10; ++i, r /= 2)
        out.push_back(r);
    return out;
}

DissipativityVerdict check_approx_pseudo_dissipative(const OperatorField& field, const RationalVector& xbar,
                                                     const PolyhedralCone& k, const DissipativityOptions& options)
{
    if (xbar.dim() != field.in_dim() || k.dim() != field.rows())
        throw DimensionMismatch("dissipativity check: dimensions of xbar, field and K disagree");
    const auto eps_samples = options.eps_samples.empty() ? default_eps_samples(k) : options.eps_samples;
    const auto radii = options.radii.empty() ? default_radii() : options.radii;
    for (const auto& e : eps_samples) {
        if (e.dim() != k.dim())
            throw DimensionMismatch("eps sample has wrong dimension");
        if (!cone_contains(k, e, true))
            throw PreconditionViolation("eps sample " + e.str() + " is not interior to K");
    }
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i] < radii[i - 1]))
            throw PreconditionViolation("radii must be strictly decreasing");
    if (radii.empty() || radii.back() <= 0)
        throw PreconditionViolation("radii must be positive");

    std::vector<RationalVector> anchors{xbar};
    for (const auto& o : field.overrides())
        anchors.push_back(o.point);
    const auto at_center = field.at(xbar);

    auto admissible = [&](const RationalVector& x, const RationalVector& eps) {
        const RationalVector step = x - xbar;
        const RationalVector bound = max_norm(step) * eps;
        for (const auto& t : field.at(x))
            for (const auto& tstar : at_center)
                if (cone_contains(k, bound - (t - tstar).apply(step)))
                    return true;
        return false;
    };

    DissipativityVerdict verdict;
    for (const auto& eps : eps_samples) {
        EpsTrace trace{eps, {}, std::nullopt};
        for (const auto& r : radii) {
            const BoxSet ball(xbar - RationalVector::constant(xbar.dim(), r),
                              xbar + RationalVector::constant(xbar.dim(), r));
            const auto pts = grid_points(GridSpec(ball, options.points_per_axis), anchors);
            RadiusAttempt attempt{r, std::nullopt};
            for (const auto& x : pts) {
                if (!admissible(x, eps)) {
                    attempt.violation = x;
                    break;
                }
            }
            const bool ok = !attempt.violation;
            trace.attempts.push_back(std::move(attempt));
            if (ok) {
                trace.accepted_radius = r;
                break;
            }
        }
        const bool exhausted = !trace.accepted_radius;
        verdict.traces.push_back(trace);
        if (exhausted) {
            verdict.falsified = true;
            verdict.failing_eps = eps;
            verdict.witness = trace.attempts.back().violation;
            break;
        }
    }
    return verdict;
}

} // namespace dcvopt
