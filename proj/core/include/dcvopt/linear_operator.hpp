#pragma once

#include "dcvopt/rational.hpp"

#include <vector>

namespace dcvopt {

/// Element of L(Q^n, Q^m), stored as an m x n matrix of rationals.
class LinearOperator {
public:
    LinearOperator() = default;
    LinearOperator(std::size_t rows, std::size_t cols);
    /// Builds from rows; every row must have the same length.
    explicit LinearOperator(std::vector<RationalVector> rows);

    /// m x 1 operator whose single column is v. For X = Q this identifies
    /// L(X, Y) with Y.
    static LinearOperator column(const RationalVector& v);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return rows_[r][c]; }
    const RationalVector& row(std::size_t r) const { return rows_[r]; }
    RationalVector col(std::size_t c) const;

    RationalVector apply(const RationalVector& x) const;

    /// y* o T as a functional on X, i.e. T^t y*.
    RationalVector transpose_apply(const RationalVector& ystar) const;

    LinearOperator& operator*=(const Rational& s);
    friend LinearOperator operator-(const LinearOperator& a, const LinearOperator& b);
    friend bool operator==(const LinearOperator& a, const LinearOperator& b)
    {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

    /// "a, b; c, d" with rows separated by ';'.
    std::string str() const;

private:
    std::size_t cols_ = 0;
    std::vector<RationalVector> rows_;
};

/// Parses "a, b; c, d" (rows split on ';').
LinearOperator parse_matrix(std::string_view text);

} // namespace dcvopt
