#include "dcvopt/linalg.hpp"

namespace dcvopt::linalg {

std::vector<RationalVector> rref(std::vector<RationalVector> rows, std::size_t cols)
{
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < cols && lead_row < rows.size(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[lead_row]);
        const Rational inv = 1 / rows[lead_row][col];
        rows[lead_row] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead_row || rows[r][col] == 0)
                continue;
            const Rational factor = rows[r][col];
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] -= factor * rows[lead_row][c];
        }
        ++lead_row;
    }
    rows.resize(lead_row);
    return rows;
}

std::size_t rank(const std::vector<RationalVector>& rows, std::size_t cols)
{
    return rref(rows, cols).size();
}

std::vector<RationalVector> null_space(const std::vector<RationalVector>& rows, std::size_t cols)
{
    const auto reduced = rref(rows, cols);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (const auto& row : reduced) {
        std::size_t c = 0;
        while (row[c] == 0)
            ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        RationalVector v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < reduced.size(); ++r)
            v[pivot_col[r]] = -reduced[r][free];
        basis.push_back(primitive_integer(v));
    }
    return basis;
}

} // namespace dcvopt::linalg
