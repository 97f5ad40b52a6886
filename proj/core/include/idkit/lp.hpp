#pragma once

#include <vector>

#include "idkit/vec.hpp"

namespace idkit {

enum class LPStatus { OPTIMAL, INFEASIBLE, UNBOUNDED };

struct LPResult {
  LPStatus status = LPStatus::INFEASIBLE;
  Rat optimum;  // meaningful only when OPTIMAL
  Vec primal;   // lexicographically smallest optimal solution
  Vec dual;     // y >= 0 with A^T y = c and b^T y = optimum (maximize form)
};

/**
 * Exact simplex over Ax <= b with free variables, Bland's anti-cycling rule.
 * For maximize=false the dual certifies the equivalent negated maximization
 * (A^T dual = -c, b^T dual = -optimum). Degenerate optima are resolved to
 * the lexicographically smallest optimal point, so results are canonical.
 */
LPResult lp_solve(const Vec& c, const Mat& A, const Vec& b, bool maximize);

// Internal engine form: per-variable sign restriction, no canonicalization
// pass. Used by the geometry layers where only status/optimum matter.
struct LPProblem {
  Vec c;
  Mat A;
  Vec b;
  std::vector<bool> nonneg;  // empty means all variables free
};

struct SimplexResult {
  LPStatus status = LPStatus::INFEASIBLE;
  Rat optimum;
  Vec x;
  Vec y;
};

/** Maximize c^T x subject to Ax <= b and the sign restrictions. */
SimplexResult simplex_solve(const LPProblem& p);

/** True iff {x : Ax <= b, sign restrictions} is nonempty. */
bool lp_feasible(const Mat& A, const Vec& b, const std::vector<bool>& nonneg = {});

}  // namespace idkit
