#pragma once

// Fraction-free (Bareiss) Gaussian elimination over arbitrary-precision
// integers. Every intermediate entry is a minor of the input matrix, so the
// divisions in the elimination step are exact and no rationals appear until
// back substitution.

#include "grm/numeric.hpp"

#include <optional>

namespace grm {

// Rank by fraction-free row echelon with column pivot search. Destroys its
// copy of the argument.
Eigen::Index rank_exact(BigIntMat m);

// Exact solution of the square system a x = b, or nullopt when a is
// singular. Pivoting picks the first nonzero entry in each column, so the
// elimination is deterministic.
std::optional<RatVec> solve_linear_exact(BigIntMat a, BigIntVec b);

BigIntMat to_bigint(const Int64Mat& m);
BigIntVec to_bigint(const Int64Vec& v);

}  // namespace grm
