#include "superdiv/linalg.hpp"

#include <stdexcept>

namespace superdiv {

std::size_t rref(RationalMatrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);

        Rational inv = m[rank][col];
        for (std::size_t c = col; c < cols; ++c) m[rank][c] /= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::size_t matrix_rank(RationalMatrix m) { return rref(m); }

std::optional<RationalRow> solve_exact(const std::vector<RationalRow>& columns,
                                       const RationalRow& target) {
    const std::size_t unknowns = columns.size(), eqs = target.size();
    for (const auto& col : columns)
        if (col.size() != eqs)
            throw std::invalid_argument("column length does not match target");

    // Augmented system [A | target], A laid out per equation.
    RationalMatrix aug(eqs, RationalRow(unknowns + 1));
    for (std::size_t r = 0; r < eqs; ++r) {
        for (std::size_t k = 0; k < unknowns; ++k) aug[r][k] = columns[k][r];
        aug[r][unknowns] = target[r];
    }
    std::size_t rank = rref(aug);

    RationalRow solution(unknowns, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) {
        std::size_t lead = 0;
        while (lead <= unknowns && aug[r][lead] == 0) ++lead;
        if (lead == unknowns) return std::nullopt;  // pivot in the constant column
        solution[lead] = aug[r][unknowns];
    }
    return solution;
}

}  // namespace superdiv
