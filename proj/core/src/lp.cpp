#include "dcvopt/lp.hpp"

#include <algorithm>

namespace dcvopt {

const char* relation_symbol(Relation r)
{
    switch (r) {
    case Relation::GreaterEqual:
        return ">=";
    case Relation::Equal:
        return "=";
    case Relation::Greater:
        return ">";
    }
    return "?";
}

LinearFeasibilityProblem::LinearFeasibilityProblem(std::vector<std::string> variable_names)
    : names_(std::move(variable_names))
{
    if (names_.empty())
        throw Error("feasibility problem needs at least one variable");
    if (names_.size() > kMaxVariables)
        throw Error("feasibility problem has " + std::to_string(names_.size()) + " variables; at most "
                    + std::to_string(kMaxVariables) + " are supported");
}

void LinearFeasibilityProblem::add(RationalVector coeffs, Relation relation, Rational rhs, std::string label)
{
    if (coeffs.dim() != names_.size())
        throw DimensionMismatch("constraint has " + std::to_string(coeffs.dim()) + " coefficients, expected "
                                + std::to_string(names_.size()));
    constraints_.push_back(LinearConstraint{std::move(coeffs), relation, std::move(rhs), std::move(label)});
}

std::vector<Rational> LinearFeasibilityProblem::residuals(const RationalVector& assignment) const
{
    std::vector<Rational> out;
    out.reserve(constraints_.size());
    for (const auto& c : constraints_)
        out.push_back(dot(c.coeffs, assignment) - c.rhs);
    return out;
}

bool LinearFeasibilityProblem::satisfied_by(const RationalVector& assignment) const
{
    const auto res = residuals(assignment);
    for (std::size_t i = 0; i < res.size(); ++i) {
        switch (constraints_[i].relation) {
        case Relation::GreaterEqual:
            if (res[i] < 0)
                return false;
            break;
        case Relation::Equal:
            if (res[i] != 0)
                return false;
            break;
        case Relation::Greater:
            if (res[i] <= 0)
                return false;
            break;
        }
    }
    return true;
}

namespace {

// Dense tableau for min c.x, A x = b, x >= 0 with b >= 0.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : a_(rows, std::vector<Rational>(cols)), b_(rows), basis_(rows), reduced_(cols), enterable_(cols, true)
    {
    }

    std::vector<Rational>& row(std::size_t r) { return a_[r]; }
    Rational& rhs(std::size_t r) { return b_[r]; }
    std::size_t rows() const { return a_.size(); }
    std::size_t cols() const { return reduced_.size(); }
    std::size_t basic(std::size_t r) const { return basis_[r]; }
    void set_basic(std::size_t r, std::size_t c) { basis_[r] = c; }
    void forbid(std::size_t c) { enterable_[c] = false; }
    std::size_t pivots() const { return pivots_; }
    const Rational& reduced(std::size_t c) const { return reduced_[c]; }

    /// Installs cost vector c and prices it against the current basis.
    void set_costs(const std::vector<Rational>& c)
    {
        reduced_ = c;
        neg_objective_ = 0;
        for (std::size_t r = 0; r < rows(); ++r) {
            const Rational cb = c[basis_[r]];
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j < cols(); ++j)
                if (a_[r][j] != 0)
                    reduced_[j] -= cb * a_[r][j];
            neg_objective_ -= cb * b_[r];
        }
    }

    Rational objective() const { return -neg_objective_; }

    void optimize()
    {
        while (true) {
            std::size_t enter = cols();
            for (std::size_t j = 0; j < cols(); ++j) {
                if (enterable_[j] && reduced_[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols())
                return;
            std::size_t leave = rows();
            Rational best_ratio;
            for (std::size_t r = 0; r < rows(); ++r) {
                if (a_[r][enter] <= 0)
                    continue;
                const Rational ratio = b_[r] / a_[r][enter];
                if (leave == rows() || ratio < best_ratio
                    || (ratio == best_ratio && basis_[r] < basis_[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave == rows())
                throw Error("simplex: objective unbounded in a bounded feasibility model");
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        ++pivots_;
        auto& pr = a_[r];
        const Rational inv = 1 / pr[c];
        for (auto& v : pr)
            if (v != 0)
                v *= inv;
        b_[r] *= inv;
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < cols(); ++j)
            if (pr[j] != 0)
                nz.push_back(j);
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == r || a_[i][c] == 0)
                continue;
            const Rational f = a_[i][c];
            for (std::size_t j : nz)
                a_[i][j] -= f * pr[j];
            b_[i] -= f * b_[r];
        }
        if (reduced_[c] != 0) {
            const Rational f = reduced_[c];
            for (std::size_t j : nz)
                reduced_[j] -= f * pr[j];
            neg_objective_ -= f * b_[r];
        }
        basis_[r] = c;
    }

    Rational value_of(std::size_t col) const
    {
        for (std::size_t r = 0; r < rows(); ++r)
            if (basis_[r] == col)
                return b_[r];
        return 0;
    }

    void drop_row(std::size_t r)
    {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
        b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

private:
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> reduced_;
    std::vector<bool> enterable_;
    Rational neg_objective_ = 0;
    std::size_t pivots_ = 0;
};

bool is_farkas_certificate(const LinearFeasibilityProblem& lfp, const std::vector<Rational>& u)
{
    const auto& cons = lfp.constraints();
    RationalVector combo(lfp.num_variables());
    Rational bound = 0;
    for (std::size_t i = 0; i < cons.size(); ++i) {
        if (cons[i].relation != Relation::Equal && u[i] < 0)
            return false;
        combo += u[i] * cons[i].coeffs;
        bound += u[i] * cons[i].rhs;
    }
    return combo.is_zero() && bound > 0;
}

} // namespace

FeasibilityResult solve_feasibility(const LinearFeasibilityProblem& lfp)
{
    const std::size_t n = lfp.num_variables();
    const auto& cons = lfp.constraints();
    const bool has_strict = std::any_of(cons.begin(), cons.end(),
                                        [](const LinearConstraint& c) { return c.relation == Relation::Greater; });

    // Column layout: v+ | v- | s | surplus per inequality | cap slack | artificials.
    const std::size_t s_col = 2 * n;
    std::size_t next = has_strict ? s_col + 1 : s_col;
    std::vector<std::size_t> surplus(cons.size(), 0);
    for (std::size_t i = 0; i < cons.size(); ++i)
        if (cons[i].relation != Relation::Equal)
            surplus[i] = next++;
    const std::size_t cap_col = has_strict ? next++ : 0;

    std::vector<bool> needs_artificial(cons.size());
    std::size_t artificial_count = 0;
    for (std::size_t i = 0; i < cons.size(); ++i) {
        // Inequality rows with rhs <= 0 are negated so the surplus column is
        // an identity column; everything else gets an artificial.
        needs_artificial[i] = cons[i].relation == Relation::Equal || cons[i].rhs > 0;
        if (needs_artificial[i])
            ++artificial_count;
    }
    const std::size_t first_artificial = next;
    const std::size_t total_cols = next + artificial_count;
    const std::size_t total_rows = cons.size() + (has_strict ? 1 : 0);

    Tableau tab(total_rows, total_cols);
    std::size_t art = first_artificial;
    for (std::size_t i = 0; i < cons.size(); ++i) {
        auto& row = tab.row(i);
        const auto& c = cons[i];
        for (std::size_t k = 0; k < n; ++k) {
            row[k] = c.coeffs[k];
            row[n + k] = -c.coeffs[k];
        }
        if (c.relation == Relation::Greater)
            row[s_col] = -1;
        if (c.relation != Relation::Equal)
            row[surplus[i]] = -1;
        tab.rhs(i) = c.rhs;
        if (needs_artificial[i]) {
            if (c.rhs < 0) {
                for (auto& v : row)
                    v = -v;
                tab.rhs(i) = -c.rhs;
            }
            row[art] = 1;
            tab.set_basic(i, art++);
        } else {
            for (auto& v : row)
                v = -v;
            tab.rhs(i) = -c.rhs;
            tab.set_basic(i, surplus[i]);
        }
    }
    if (has_strict) {
        const std::size_t r = cons.size();
        tab.row(r)[s_col] = 1;
        tab.row(r)[cap_col] = 1;
        tab.rhs(r) = 1;
        tab.set_basic(r, cap_col);
    }

    FeasibilityResult result;
    if (artificial_count > 0) {
        std::vector<Rational> phase1(total_cols);
        for (std::size_t j = first_artificial; j < total_cols; ++j)
            phase1[j] = 1;
        tab.set_costs(phase1);
        tab.optimize();
        if (tab.objective() > 0) {
            result.pivots = tab.pivots();
            if (!has_strict) {
                // Phase-1 prices, read off the artificial or surplus column of
                // each row and mapped back through the row's sign flip.
                std::vector<Rational> u(cons.size());
                std::size_t a = first_artificial;
                for (std::size_t i = 0; i < cons.size(); ++i) {
                    const bool flipped = !needs_artificial[i] || cons[i].rhs < 0;
                    const Rational price = needs_artificial[i] ? Rational(1 - tab.reduced(a++)) : Rational(-tab.reduced(surplus[i]));
                    u[i] = flipped ? Rational(-price) : price;
                }
                if (is_farkas_certificate(lfp, u))
                    result.farkas = std::move(u);
            }
            return result;
        }
        // Drive zero-level artificials out of the basis; rows that cannot be
        // pivoted are redundant.
        for (std::size_t r = tab.rows(); r-- > 0;) {
            if (tab.basic(r) < first_artificial)
                continue;
            std::size_t col = first_artificial;
            for (std::size_t j = 0; j < first_artificial; ++j) {
                if (tab.row(r)[j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col < first_artificial)
                tab.pivot(r, col);
            else
                tab.drop_row(r);
        }
        for (std::size_t j = first_artificial; j < total_cols; ++j)
            tab.forbid(j);
    }

    if (has_strict) {
        std::vector<Rational> phase2(total_cols);
        phase2[s_col] = -1;
        tab.set_costs(phase2);
        tab.optimize();
        result.strict_margin = tab.value_of(s_col);
        if (*result.strict_margin <= 0) {
            result.pivots = tab.pivots();
            return result;
        }
    }

    result.feasible = true;
    result.assignment = RationalVector(n);
    for (std::size_t k = 0; k < n; ++k)
        result.assignment[k] = tab.value_of(k) - tab.value_of(n + k);
    result.pivots = tab.pivots();
    return result;
}

} // namespace dcvopt
