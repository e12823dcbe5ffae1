#include "dcvopt/linear_operator.hpp"

namespace dcvopt {

LinearOperator::LinearOperator(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, RationalVector(cols))
{
}

LinearOperator::LinearOperator(std::vector<RationalVector> rows) : rows_(std::move(rows))
{
    if (rows_.empty())
        throw Error("operator needs at least one row");
    cols_ = rows_.front().dim();
    for (const auto& r : rows_)
        if (r.dim() != cols_)
            throw DimensionMismatch("operator rows have inconsistent lengths");
}

LinearOperator LinearOperator::column(const RationalVector& v)
{
    LinearOperator op(v.dim(), 1);
    for (std::size_t i = 0; i < v.dim(); ++i)
        op(i, 0) = v[i];
    return op;
}

RationalVector LinearOperator::col(std::size_t c) const
{
    RationalVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        v[r] = rows_[r][c];
    return v;
}

RationalVector LinearOperator::apply(const RationalVector& x) const
{
    if (x.dim() != cols_)
        throw DimensionMismatch("operator applied to vector of wrong dimension");
    RationalVector y(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        y[r] = dot(rows_[r], x);
    return y;
}

RationalVector LinearOperator::transpose_apply(const RationalVector& ystar) const
{
    if (ystar.dim() != rows())
        throw DimensionMismatch("functional dimension does not match operator range");
    RationalVector out(cols_);
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[c] += ystar[r] * rows_[r][c];
    return out;
}

LinearOperator& LinearOperator::operator*=(const Rational& s)
{
    for (auto& r : rows_)
        r *= s;
    return *this;
}

LinearOperator operator-(const LinearOperator& a, const LinearOperator& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("operator subtraction: shape mismatch");
    LinearOperator out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        out.rows_[r] -= b.rows_[r];
    return out;
}

std::string LinearOperator::str() const
{
    std::string out;
    for (std::size_t r = 0; r < rows(); ++r) {
        if (r)
            out += "; ";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c)
                out += ", ";
            out += to_string(rows_[r][c]);
        }
    }
    return out;
}

LinearOperator parse_matrix(std::string_view text)
{
    std::vector<RationalVector> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find(';', start);
        const auto piece = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
        rows.push_back(parse_vector(piece));
        if (end == std::string_view::npos)
            break;
        start = end + 1;
    }
    return LinearOperator(std::move(rows));
}

} // namespace dcvopt
