#pragma once

#include <optional>
#include <vector>

#include "flagchow/rational.hpp"

namespace flagchow {

using RatRow = std::vector<Rational>;
using RatMatrix = std::vector<RatRow>;

// In-place reduced row echelon form; returns the pivot column of each
// surviving row.  Zero rows are dropped, pivots are normalized to 1, and the
// result is canonical for the row space.
std::vector<int> rref(RatMatrix& matrix);

// Reduce a row against an RREF basis (pivots as returned by rref); the
// result is the canonical representative modulo the row space.
RatRow reduce_against(const RatMatrix& basis, const std::vector<int>& pivots,
                      RatRow row);

// Solve sum_j x_j * columns[j] == target exactly.  Returns nullopt when the
// system is inconsistent or the solution is not unique.
std::optional<RatRow> solve_unique(const std::vector<RatRow>& columns,
                                   const RatRow& target);

// Like solve_unique but tolerates free unknowns, which are set to zero.
std::optional<RatRow> solve_any(const std::vector<RatRow>& columns,
                                const RatRow& target);

// Basis of { c : sum_j c_j * columns[j] == 0 }, one vector per free unknown.
RatMatrix kernel_basis(const std::vector<RatRow>& columns);

}  // namespace flagchow
