#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "idkit/polyhedron.hpp"
#include "idkit/smoothmap.hpp"
#include "idkit/vec.hpp"

namespace idkit {

// f(x) = max_i {<a_i, x> + b_i} on {x : <c_j, x> <= d_j}, +infinity outside.
struct AffinePiece {
  Vec a;
  Rat b;
};
struct AffineConstraint {
  Vec c;
  Rat d;
};

struct PolyhedralFunction {
  std::vector<AffinePiece> pieces;
  std::vector<AffineConstraint> constraints;

  std::size_t dim() const { return pieces.empty() ? 0 : pieces[0].a.dim(); }
};

/** Validating constructor: at least one piece, consistent dimensions. */
PolyhedralFunction make_polyhedral_function(std::vector<AffinePiece> pieces,
                                            std::vector<AffineConstraint> constraints);

// conv(conv_gens) + cone(ray_gens) with conv_gens nonempty: a subdifferential.
struct SubdiffRep {
  std::vector<Vec> conv_gens;
  std::vector<Vec> ray_gens;
};

GenCone subdiff_cone(const SubdiffRep& S);
bool subdiff_member(const Vec& v, const SubdiffRep& S);

/** Exact value; empty optional encodes +infinity. */
std::optional<Rat> value(const PolyhedralFunction& f, const Vec& x);

Polyhedron domain_polyhedron(const PolyhedralFunction& f);

/** (I(x), J(x)): pieces attaining the max and constraints tight at x. */
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> active_sets_f(
    const PolyhedralFunction& f, const Vec& x);

SubdiffRep subdifferential(const PolyhedralFunction& f, const Vec& x);

GenCone horizon_subdifferential(const PolyhedralFunction& f, const Vec& x);

/** Epigraph in R^{n+1}, last coordinate the value axis. */
Polyhedron epigraph(const PolyhedralFunction& f);

// f = g o F.
struct CompositeFunction {
  PolyhedralFunction g;
  SmoothMap F;
};

/** True iff ker of the adjoint Jacobian meets the horizon cone of g only at 0. */
bool qualification_check(const CompositeFunction& cf, const Vec& x);

/** Adjoint-Jacobian image of the subdifferential of g at F(x). */
SubdiffRep subdifferential_composite(const CompositeFunction& cf, const Vec& x);

}  // namespace idkit
