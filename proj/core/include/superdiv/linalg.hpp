#pragma once

#include <optional>
#include <vector>

#include "superdiv/rational.hpp"

namespace superdiv {

using RationalRow = std::vector<Rational>;
using RationalMatrix = std::vector<RationalRow>;

// In-place reduced row echelon form with pivots chosen in ascending column
// order (columns are expected to be pre-sorted by the caller's monomial
// order). Returns the rank; afterwards the first `rank` rows are the reduced
// basis with pivot entries 1, remaining rows are zero.
std::size_t rref(RationalMatrix& m);

std::size_t matrix_rank(RationalMatrix m);

// Solves sum_k x_k * columns[k] = target exactly. Returns std::nullopt when
// the system is infeasible; otherwise a deterministic solution (free
// variables pinned to zero).
std::optional<RationalRow> solve_exact(const std::vector<RationalRow>& columns,
                                       const RationalRow& target);

}  // namespace superdiv
