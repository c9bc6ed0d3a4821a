#pragma once

#include <vector>

#include "waring/bigfloat.hpp"
#include "waring/rational.hpp"

namespace waring {

using QMatrix = std::vector<std::vector<Rational>>;

int matrix_rank(QMatrix m);

// Canonical kernel basis from the reduced row echelon form: one vector per
// free column, scaled to a primitive integer vector with positive first
// nonzero entry. Deterministic, so callers can test against exact vectors.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m, std::size_t cols);

// Solves A x = b for an (possibly overdetermined) system that is known to be
// consistent with full column rank; throws InvariantError otherwise.
std::vector<Rational> solve_exact(QMatrix a, std::vector<Rational> b);

using CMatrix = std::vector<std::vector<Complex>>;

// Gaussian elimination with partial pivoting on an overdetermined system;
// rows beyond the column count are dropped after pivoting (consistency is the
// caller's responsibility -- it re-verifies by residual).
std::vector<Complex> solve_numeric(CMatrix a, std::vector<Complex> b);

}  // namespace waring
