#pragma once

#include <cstddef>
#include <vector>

#include "idkit/vec.hpp"

namespace idkit {

// Q = {x : <a_i, x> <= b_i}. A zero row must have b_i >= 0, so emptiness is
// always witnessed by the LP and never baked into a single row.
struct Polyhedron {
  Mat A;
  Vec b;

  std::size_t dim() const { return A.ncols; }
  std::size_t nrows() const { return A.nrows(); }
};

/** Validating constructor: row/rhs lengths must match, no zero row with negative rhs. */
Polyhedron make_polyhedron(Mat A, Vec b);

/** Intersection, rows concatenated. */
Polyhedron poly_intersect(const Polyhedron& P, const Polyhedron& R);

bool poly_contains(const Polyhedron& Q, const Vec& x);
bool poly_empty(const Polyhedron& Q);

/** Indices of constraints tight at x, ascending. x must lie in Q. */
std::vector<std::size_t> active_set(const Polyhedron& Q, const Vec& x);

/** Rows tight at every point of Q, ascending. */
std::vector<std::size_t> implied_equalities(const Polyhedron& Q);

// Face of Q as its maximal tight index set; equality of faces is equality
// of the index sets.
struct FaceDescriptor {
  std::vector<std::size_t> tight;
  bool operator==(const FaceDescriptor&) const = default;
};

// conv(conv_gens) + cone(ray_gens); with no conv_gens this is the finitely
// generated cone of the rays (which contains 0).
struct GenCone {
  std::vector<Vec> conv_gens;
  std::vector<Vec> ray_gens;
};

GenCone normal_cone(const Polyhedron& Q, const Vec& x);
Polyhedron tangent_cone(const Polyhedron& Q, const Vec& x);

bool cone_member(const Vec& v, const GenCone& C);
bool relative_interior_member(const Vec& v, const GenCone& C);

/** Default cap on constraint rows for face enumeration (20 unless IDKIT_FACE_BUDGET is set). */
std::size_t face_budget_default();

std::vector<FaceDescriptor> faces_enumerate(const Polyhedron& Q);
std::vector<FaceDescriptor> faces_enumerate(const Polyhedron& Q, std::size_t budget);

/** Q restricted to a face: the tight rows become equalities. */
Polyhedron face_polyhedron(const Polyhedron& Q, const FaceDescriptor& F);

/** Dimension of the face's affine hull. */
std::size_t face_dim(const Polyhedron& Q, const FaceDescriptor& F);

/** Euclidean projection onto nonempty Q, exact. */
Vec project(const Polyhedron& Q, const Vec& z);
/** Same, with the face list precomputed by the caller. */
Vec project(const Polyhedron& Q, const Vec& z, const std::vector<FaceDescriptor>& faces);

/** Face on which <v, .> attains its maximum over Q. */
FaceDescriptor face_of_maximizers(const Polyhedron& Q, const Vec& v);

// gph G = union of pieces in R^{n+m}.
struct PiecewisePolyhedralMapping {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Polyhedron> pieces;
};

/**
 * Projections onto the first n coordinates of the pieces through (xbar, vbar),
 * as a union-of-polyhedra descriptor.
 */
std::vector<Polyhedron> ppm_minimal_identifiable(const PiecewisePolyhedralMapping& G,
                                                 const Vec& xbar, const Vec& vbar);

/**
 * Fourier-Motzkin elimination of coordinates [keep, dim); the result lives in
 * R^keep. Redundant rows are pruned by LP after each eliminated variable;
 * the budget caps intermediate row counts.
 */
Polyhedron fm_project_prefix(const Polyhedron& P, std::size_t keep,
                             std::size_t budget = 2000);

/** Inequality description of a generated cone/convex set, via elimination of the coefficients. */
Polyhedron cone_hrep(const GenCone& C, std::size_t dim);

/** Graph of the normal cone mapping x => N_Q(x) as one piece per face. */
PiecewisePolyhedralMapping normal_cone_graph(const Polyhedron& Q);

}  // namespace idkit
