#pragma once

#include <optional>
#include <vector>

#include "idkit/vec.hpp"

namespace idkit {

struct LinearSolveResult {
  std::optional<Vec> solution;  // particular solution with free variables at 0
  std::size_t rank = 0;
  std::vector<Vec> null_basis;  // basis of {x : Ax = 0}

  bool consistent() const { return solution.has_value(); }
};

/** Exact Gauss-Jordan solve of Ax = b. */
LinearSolveResult solve_linear(const Mat& A, const Vec& b);

/** rank(A) without a right-hand side. */
std::size_t mat_rank(const Mat& A);

/** Basis of the null space of A. */
std::vector<Vec> null_space(const Mat& A);

}  // namespace idkit
