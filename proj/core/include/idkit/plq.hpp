#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "idkit/functions.hpp"
#include "idkit/polyhedron.hpp"
#include "idkit/vec.hpp"

namespace idkit {

// On its cell, f(x) = (1/2)<x, Px> + <q, x> + r.
struct PLQCell {
  Polyhedron cell;
  Mat P;
  Vec q;
  Rat r;
};

// Piecewise linear-quadratic function; +infinity off the union of cells.
// convex_certified records the outcome of the construction-time certificate:
// every P positive semidefinite, values agreeing on cell intersections, and
// gradient jumps across shared facets pointing the convex way.
struct PLQFunction {
  std::vector<PLQCell> cells;
  bool convex_certified = false;

  std::size_t dim() const { return cells.empty() ? 0 : cells[0].cell.dim(); }
};

PLQFunction make_plq(std::vector<PLQCell> cells);

/** Exact semidefiniteness by pivoted elimination. */
bool plq_psd(const Mat& P);

std::optional<Rat> plq_value(const PLQFunction& f, const Vec& x);

/** Indices of cells containing x, ascending. */
std::vector<std::size_t> plq_cells_at(const PLQFunction& f, const Vec& x);

/** Gradients P_c x + q_c of the cells containing x. */
std::vector<Vec> plq_gradients_at(const PLQFunction& f, const Vec& x);

/**
 * Membership v in conv(cell gradients at x) + N_dom(x), with the domain
 * normal cone handled as the intersection of the active cells' normal cones.
 */
bool plq_subgradient_member(const PLQFunction& f, const Vec& x, const Vec& v);

/** Proximal point of a certified-convex PLQ function, exact. */
Vec prox(const PLQFunction& f, const Rat& lambda, const Vec& z);

}  // namespace idkit
