#pragma once

#include <cstddef>
#include <vector>

#include "idkit/vec.hpp"

namespace idkit {

// Multivariate polynomial term: coef * prod x_j^exps[j].
struct PolyTerm {
  Rat coef;
  std::vector<unsigned> exps;
};

struct Polynomial {
  std::size_t nvars = 0;
  std::vector<PolyTerm> terms;
};

Rat poly_eval(const Polynomial& p, const Vec& x);
Polynomial poly_diff(const Polynomial& p, std::size_t var);

// Map R^n -> R^m with polynomial components; values and Jacobians are exact
// at rational points.
struct SmoothMap {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Polynomial> components;
};

SmoothMap make_smooth_map(std::vector<Polynomial> components, std::size_t n);

Vec smooth_eval(const SmoothMap& F, const Vec& x);
Mat smooth_jacobian(const SmoothMap& F, const Vec& x);

/**
 * Exact central-difference probe of the Jacobian at x (dyadic step). True iff
 * every entry matches within the relative tolerance.
 */
bool smooth_fd_check(const SmoothMap& F, const Vec& x, double rel_tol = 1e-6);

}  // namespace idkit
