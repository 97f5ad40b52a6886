#include "idkit/functions.hpp"

#include "idkit/errors.hpp"
#include "idkit/lp.hpp"

namespace idkit {

PolyhedralFunction make_polyhedral_function(std::vector<AffinePiece> pieces,
                                            std::vector<AffineConstraint> constraints) {
  if (pieces.empty()) throw ParseError("a polyhedral function needs at least one piece");
  const std::size_t n = pieces[0].a.dim();
  for (const AffinePiece& p : pieces)
    if (p.a.dim() != n) throw DimensionMismatch("piece dimension mismatch");
  for (const AffineConstraint& c : constraints)
    if (c.c.dim() != n) throw DimensionMismatch("constraint dimension mismatch");
  return PolyhedralFunction{std::move(pieces), std::move(constraints)};
}

GenCone subdiff_cone(const SubdiffRep& S) { return GenCone{S.conv_gens, S.ray_gens}; }

bool subdiff_member(const Vec& v, const SubdiffRep& S) {
  return cone_member(v, subdiff_cone(S));
}

std::optional<Rat> value(const PolyhedralFunction& f, const Vec& x) {
  for (const AffineConstraint& c : f.constraints)
    if (dot(c.c, x) > c.d) return std::nullopt;
  Rat best = dot(f.pieces[0].a, x) + f.pieces[0].b;
  for (std::size_t i = 1; i < f.pieces.size(); ++i)
    best = rat_max(best, dot(f.pieces[i].a, x) + f.pieces[i].b);
  return best;
}

Polyhedron domain_polyhedron(const PolyhedralFunction& f) {
  Polyhedron D;
  D.A = Mat(f.dim());
  for (const AffineConstraint& c : f.constraints) {
    D.A.add_row(c.c);
    D.b.e.push_back(c.d);
  }
  return D;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> active_sets_f(
    const PolyhedralFunction& f, const Vec& x) {
  const auto val = value(f, x);
  if (!val) throw PointNotInDomain("function is +infinity at the point");
  std::vector<std::size_t> I, J;
  for (std::size_t i = 0; i < f.pieces.size(); ++i)
    if (dot(f.pieces[i].a, x) + f.pieces[i].b == *val) I.push_back(i);
  for (std::size_t j = 0; j < f.constraints.size(); ++j)
    if (dot(f.constraints[j].c, x) == f.constraints[j].d) J.push_back(j);
  return {I, J};
}

SubdiffRep subdifferential(const PolyhedralFunction& f, const Vec& x) {
  const auto [I, J] = active_sets_f(f, x);
  SubdiffRep S;
  for (std::size_t i : I) S.conv_gens.push_back(f.pieces[i].a);
  for (std::size_t j : J) S.ray_gens.push_back(f.constraints[j].c);
  return S;
}

GenCone horizon_subdifferential(const PolyhedralFunction& f, const Vec& x) {
  const auto [I, J] = active_sets_f(f, x);
  (void)I;
  GenCone H;
  for (std::size_t j : J) H.ray_gens.push_back(f.constraints[j].c);
  return H;
}

Polyhedron epigraph(const PolyhedralFunction& f) {
  const std::size_t n = f.dim();
  Polyhedron E;
  E.A = Mat(n + 1);
  for (const AffinePiece& p : f.pieces) {
    Vec row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row.e[j] = p.a[j];
    row.e[n] = Rat(-1);
    E.A.add_row(std::move(row));
    E.b.e.push_back(-p.b);
  }
  for (const AffineConstraint& c : f.constraints) {
    Vec row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row.e[j] = c.c[j];
    E.A.add_row(std::move(row));
    E.b.e.push_back(c.d);
  }
  return E;
}

bool qualification_check(const CompositeFunction& cf, const Vec& x) {
  const Vec y0 = smooth_eval(cf.F, x);
  const GenCone H = horizon_subdifferential(cf.g, y0);  // checks the domain
  if (H.ray_gens.empty()) return true;
  const Mat J = smooth_jacobian(cf.F, x);
  const std::size_t k = H.ray_gens.size();
  const std::size_t m = cf.F.m;

  // mu >= 0, sum mu <= 1, J^T (sum mu_k h_k) = 0. The horizon cone meets the
  // kernel nontrivially iff some coordinate of y = sum mu_k h_k can be pushed
  // off 0.
  Mat A(k);
  Vec b;
  for (std::size_t c = 0; c < cf.F.n; ++c) {
    Vec row(k);
    for (std::size_t t = 0; t < k; ++t) {
      Rat s(0);
      for (std::size_t i = 0; i < m; ++i) s += J.rows[i][c] * H.ray_gens[t][i];
      row.e[t] = s;
    }
    A.add_row(row);
    b.e.push_back(Rat(0));
    A.add_row(-row);
    b.e.push_back(Rat(0));
  }
  {
    Vec ones(k);
    for (std::size_t t = 0; t < k; ++t) ones.e[t] = Rat(1);
    A.add_row(ones);
    b.e.push_back(Rat(1));
  }
  for (std::size_t l = 0; l < m; ++l) {
    Vec c(k);
    for (std::size_t t = 0; t < k; ++t) c.e[t] = H.ray_gens[t][l];
    for (const bool maximize : {true, false}) {
      LPProblem p;
      p.c = maximize ? c : -c;
      p.A = A;
      p.b = b;
      p.nonneg.assign(k, true);
      const SimplexResult r = simplex_solve(p);
      if (r.status != LPStatus::OPTIMAL || r.optimum != 0) return false;
    }
  }
  return true;
}

SubdiffRep subdifferential_composite(const CompositeFunction& cf, const Vec& x) {
  if (!qualification_check(cf, x))
    throw QualificationFailure("horizon cone meets the adjoint kernel nontrivially");
  const Vec y0 = smooth_eval(cf.F, x);
  const Mat J = smooth_jacobian(cf.F, x);
  const SubdiffRep Sg = subdifferential(cf.g, y0);
  SubdiffRep S;
  for (const Vec& a : Sg.conv_gens) S.conv_gens.push_back(vec_mat(a, J));
  for (const Vec& c : Sg.ray_gens) S.ray_gens.push_back(vec_mat(c, J));
  return S;
}

}  // namespace idkit
