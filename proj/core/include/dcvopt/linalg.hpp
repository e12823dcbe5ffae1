#pragma once

// Small exact linear-algebra kernels shared by the cone and LP code.

#include "dcvopt/rational.hpp"

#include <vector>

namespace dcvopt::linalg {

/// Reduced row echelon form; zero rows are dropped.
std::vector<RationalVector> rref(std::vector<RationalVector> rows, std::size_t cols);

std::size_t rank(const std::vector<RationalVector>& rows, std::size_t cols);

/// Basis of {y : <row, y> = 0 for every row}, read off the RREF, so the basis
/// depends only on the row space. Each vector is scaled to coprime integers.
std::vector<RationalVector> null_space(const std::vector<RationalVector>& rows, std::size_t cols);

} // namespace dcvopt::linalg
