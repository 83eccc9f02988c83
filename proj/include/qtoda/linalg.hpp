#pragma once

#include <vector>

#include "qtoda/rational.hpp"

namespace qtoda {

using RatMatrix = std::vector<std::vector<Rat>>;

// Affine solution set of A x = b: one particular solution (all free
// coordinates zero) plus a nullspace basis, or infeasible.
struct LinearSolution {
  bool feasible = false;
  std::vector<Rat> particular;
  std::vector<std::vector<Rat>> nullspace;
};

// Exact solver: rows are scaled integral, eliminated fraction-free
// (single-step Bareiss with row pivoting), then back-substituted over Q.
// The parallel variant runs the row updates of each elimination step under
// OpenMP; results are bit-identical to the serial one.
LinearSolution linear_solve(const RatMatrix& A, const std::vector<Rat>& b);
LinearSolution linear_solve_serial(const RatMatrix& A, const std::vector<Rat>& b);

}  // namespace qtoda
