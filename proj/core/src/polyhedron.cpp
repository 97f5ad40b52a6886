#include "idkit/polyhedron.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

#include "idkit/errors.hpp"
#include "idkit/linsolve.hpp"
#include "idkit/lp.hpp"

namespace idkit {
namespace {

SimplexResult poly_opt(const Polyhedron& Q, const Vec& c, bool maximize) {
  LPProblem p;
  p.c = maximize ? c : -c;
  p.A = Q.A;
  p.b = Q.b;
  SimplexResult r = simplex_solve(p);
  if (!maximize && r.status == LPStatus::OPTIMAL) r.optimum = -r.optimum;
  return r;
}

void add_equality(Polyhedron& P, const Vec& row, const Rat& rhs) {
  P.A.add_row(row);
  P.b.e.push_back(rhs);
  P.A.add_row(-row);
  P.b.e.push_back(-rhs);
}

// Rows of Q tight everywhere on the (feasible) subsystem.
std::vector<std::size_t> tight_over(const Polyhedron& Q, const Polyhedron& sub) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < Q.nrows(); ++i) {
    SimplexResult r = poly_opt(sub, Q.A.rows[i], false);
    if (r.status == LPStatus::OPTIMAL && r.optimum == Q.b[i]) out.push_back(i);
  }
  return out;
}

Polyhedron with_equalities(const Polyhedron& Q, const std::vector<std::size_t>& S) {
  Polyhedron P = Q;
  for (std::size_t i : S) add_equality(P, Q.A.rows[i], Q.b[i]);
  return P;
}

Polyhedron canonical_empty(std::size_t dim) {
  Polyhedron P;
  P.A = Mat(dim);
  P.b = Vec();
  P.A.add_row(unit_vec(dim, 0));
  P.b.e.push_back(Rat(-1));
  P.A.add_row(-unit_vec(dim, 0));
  P.b.e.push_back(Rat(0));
  return P;
}

}  // namespace

Polyhedron make_polyhedron(Mat A, Vec b) {
  if (A.nrows() != b.dim())
    throw DimensionMismatch("row count does not match rhs length");
  for (std::size_t i = 0; i < A.nrows(); ++i)
    if (is_zero(A.rows[i]) && b[i] < 0)
      throw ParseError("zero constraint row with negative bound");
  return Polyhedron{std::move(A), std::move(b)};
}

Polyhedron poly_intersect(const Polyhedron& P, const Polyhedron& R) {
  if (P.dim() != R.dim()) throw DimensionMismatch("ambient dimensions differ");
  Polyhedron out = P;
  for (std::size_t i = 0; i < R.nrows(); ++i) {
    out.A.add_row(R.A.rows[i]);
    out.b.e.push_back(R.b[i]);
  }
  return out;
}

bool poly_contains(const Polyhedron& Q, const Vec& x) {
  if (x.dim() != Q.dim()) throw DimensionMismatch("point dimension mismatch");
  const Vec Ax = mat_vec(Q.A, x);
  for (std::size_t i = 0; i < Q.nrows(); ++i)
    if (Ax[i] > Q.b[i]) return false;
  return true;
}

bool poly_empty(const Polyhedron& Q) { return !lp_feasible(Q.A, Q.b); }

std::vector<std::size_t> active_set(const Polyhedron& Q, const Vec& x) {
  if (x.dim() != Q.dim()) throw DimensionMismatch("point dimension mismatch");
  const Vec Ax = mat_vec(Q.A, x);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < Q.nrows(); ++i) {
    if (Ax[i] > Q.b[i]) throw PointNotInSet("point violates a constraint");
    if (Ax[i] == Q.b[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> implied_equalities(const Polyhedron& Q) {
  return tight_over(Q, Q);
}

GenCone normal_cone(const Polyhedron& Q, const Vec& x) {
  GenCone C;
  for (std::size_t i : active_set(Q, x)) C.ray_gens.push_back(Q.A.rows[i]);
  return C;
}

Polyhedron tangent_cone(const Polyhedron& Q, const Vec& x) {
  Polyhedron T;
  T.A = Mat(Q.dim());
  for (std::size_t i : active_set(Q, x)) {
    T.A.add_row(Q.A.rows[i]);
    T.b.e.push_back(Rat(0));
  }
  return T;
}

bool cone_member(const Vec& v, const GenCone& C) {
  const std::size_t n = v.dim();
  for (const Vec& g : C.conv_gens)
    if (g.dim() != n) throw DimensionMismatch("generator dimension mismatch");
  for (const Vec& g : C.ray_gens)
    if (g.dim() != n) throw DimensionMismatch("generator dimension mismatch");
  const std::size_t nc = C.conv_gens.size();
  const std::size_t nr = C.ray_gens.size();
  if (nc == 0 && nr == 0) return is_zero(v);

  // lambda (convex weights) then mu (ray weights), all nonnegative.
  Mat A(nc + nr);
  Vec b;
  for (std::size_t i = 0; i < n; ++i) {
    Vec row(nc + nr);
    for (std::size_t j = 0; j < nc; ++j) row.e[j] = C.conv_gens[j][i];
    for (std::size_t j = 0; j < nr; ++j) row.e[nc + j] = C.ray_gens[j][i];
    A.add_row(row);
    b.e.push_back(v[i]);
    A.add_row(-row);
    b.e.push_back(-v[i]);
  }
  if (nc > 0) {
    Vec ones(nc + nr);
    for (std::size_t j = 0; j < nc; ++j) ones.e[j] = Rat(1);
    A.add_row(ones);
    b.e.push_back(Rat(1));
    A.add_row(-ones);
    b.e.push_back(Rat(-1));
  }
  return lp_feasible(A, b, std::vector<bool>(nc + nr, true));
}

bool relative_interior_member(const Vec& v, const GenCone& C) {
  const std::size_t n = v.dim();
  const std::size_t nc = C.conv_gens.size();
  const std::size_t nr = C.ray_gens.size();
  if (nc == 0 && nr == 0) return is_zero(v);

  // Variables (lambda, mu, t): all generator weights at least t, t capped at
  // 1, t maximized. v is relatively interior iff some representation keeps
  // every weight strictly positive.
  const std::size_t nv = nc + nr + 1;
  LPProblem p;
  p.c = unit_vec(nv, nc + nr);
  p.A = Mat(nv);
  auto coef_row = [&](std::size_t i) {
    Vec row(nv);
    for (std::size_t j = 0; j < nc; ++j) row.e[j] = C.conv_gens[j][i];
    for (std::size_t j = 0; j < nr; ++j) row.e[nc + j] = C.ray_gens[j][i];
    return row;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Vec row = coef_row(i);
    p.A.add_row(row);
    p.b.e.push_back(v[i]);
    p.A.add_row(-row);
    p.b.e.push_back(-v[i]);
  }
  if (nc > 0) {
    Vec ones(nv);
    for (std::size_t j = 0; j < nc; ++j) ones.e[j] = Rat(1);
    p.A.add_row(ones);
    p.b.e.push_back(Rat(1));
    p.A.add_row(-ones);
    p.b.e.push_back(Rat(-1));
  }
  for (std::size_t j = 0; j < nc + nr; ++j) {
    Vec row(nv);
    row.e[j] = Rat(-1);
    row.e[nc + nr] = Rat(1);
    p.A.add_row(row);  // t - w_j <= 0
    p.b.e.push_back(Rat(0));
  }
  p.A.add_row(unit_vec(nv, nc + nr));
  p.b.e.push_back(Rat(1));
  p.nonneg.assign(nv, true);
  p.nonneg[nc + nr] = false;  // t may be negative when v sits on the boundary
  SimplexResult r = simplex_solve(p);
  return r.status == LPStatus::OPTIMAL && r.optimum > 0;
}

std::size_t face_budget_default() {
  if (const char* s = std::getenv("IDKIT_FACE_BUDGET")) {
    const long v = std::atol(s);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 20;
}

std::vector<FaceDescriptor> faces_enumerate(const Polyhedron& Q) {
  return faces_enumerate(Q, face_budget_default());
}

std::vector<FaceDescriptor> faces_enumerate(const Polyhedron& Q, std::size_t budget) {
  if (Q.nrows() > budget)
    throw FaceBudgetExceeded("constraint count " + std::to_string(Q.nrows()) +
                             " exceeds face enumeration budget " +
                             std::to_string(budget));
  std::vector<FaceDescriptor> out;
  if (poly_empty(Q)) return out;

  // Closure of a forced-tight set: all rows tight on that subsystem, or
  // nothing when the subsystem is empty.
  auto closure = [&](const std::vector<std::size_t>& S)
      -> std::optional<std::vector<std::size_t>> {
    const Polyhedron sub = with_equalities(Q, S);
    if (poly_empty(sub)) return std::nullopt;
    return tight_over(Q, sub);
  };

  std::set<std::vector<std::size_t>> seen;
  std::deque<std::vector<std::size_t>> work;
  auto root = closure({});
  work.push_back(*root);
  seen.insert(*root);
  while (!work.empty()) {
    std::vector<std::size_t> S = work.front();
    work.pop_front();
    for (std::size_t j = 0; j < Q.nrows(); ++j) {
      if (std::binary_search(S.begin(), S.end(), j)) continue;
      std::vector<std::size_t> S1 = S;
      S1.push_back(j);
      auto T = closure(S1);
      if (!T) continue;
      if (seen.insert(*T).second) work.push_back(*T);
    }
  }
  for (const auto& S : seen) out.push_back(FaceDescriptor{S});
  std::sort(out.begin(), out.end(), [](const FaceDescriptor& a, const FaceDescriptor& b) {
    if (a.tight.size() != b.tight.size()) return a.tight.size() < b.tight.size();
    return a.tight < b.tight;
  });
  return out;
}

Polyhedron face_polyhedron(const Polyhedron& Q, const FaceDescriptor& F) {
  return with_equalities(Q, F.tight);
}

std::size_t face_dim(const Polyhedron& Q, const FaceDescriptor& F) {
  Mat S(Q.dim());
  for (std::size_t i : F.tight) S.add_row(Q.A.rows[i]);
  return Q.dim() - mat_rank(S);
}

Vec project(const Polyhedron& Q, const Vec& z) {
  if (Q.nrows() > face_budget_default())
    throw FaceBudgetExceeded("constraint count exceeds projection budget");
  if (poly_empty(Q)) throw EmptyPolyhedron("cannot project onto the empty set");
  return project(Q, z, faces_enumerate(Q));
}

Vec project(const Polyhedron& Q, const Vec& z, const std::vector<FaceDescriptor>& faces) {
  if (z.dim() != Q.dim()) throw DimensionMismatch("point dimension mismatch");
  if (faces.empty()) throw EmptyPolyhedron("cannot project onto the empty set");
  for (const FaceDescriptor& F : faces) {
    // Candidate: projection of z onto the face's affine hull.
    const std::size_t k = F.tight.size();
    Mat AS(Q.dim());
    Vec bS;
    for (std::size_t i : F.tight) {
      AS.add_row(Q.A.rows[i]);
      bS.e.push_back(Q.b[i]);
    }
    Mat G(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) G.rows[i][j] = dot(AS.rows[i], AS.rows[j]);
    const Vec rhs = mat_vec(AS, z) - bS;
    auto sol = solve_linear(G, rhs);
    if (!sol.consistent()) continue;  // cannot happen for true faces
    Vec x = z;
    for (std::size_t i = 0; i < k; ++i) x = x - (*sol.solution)[i] * AS.rows[i];
    if (!poly_contains(Q, x)) continue;
    if (cone_member(z - x, normal_cone(Q, x))) return x;
  }
  throw Error("no face certified the projection");
}

FaceDescriptor face_of_maximizers(const Polyhedron& Q, const Vec& v) {
  SimplexResult r = poly_opt(Q, v, true);
  if (r.status == LPStatus::INFEASIBLE)
    throw EmptyPolyhedron("maximization over the empty set");
  if (r.status == LPStatus::UNBOUNDED)
    throw Unbounded("linear functional unbounded above on the set");
  Polyhedron sub = Q;
  add_equality(sub, v, r.optimum);
  return FaceDescriptor{tight_over(Q, sub)};
}

Polyhedron fm_project_prefix(const Polyhedron& P, std::size_t keep, std::size_t budget) {
  if (keep == 0 || keep > P.dim())
    throw DimensionMismatch("kept coordinate count out of range");
  if (poly_empty(P)) return canonical_empty(keep);

  Mat A = P.A;
  Vec b = P.b;
  for (std::size_t d = P.dim(); d > keep; --d) {
    const std::size_t k = d - 1;  // eliminate the last coordinate
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t i = 0; i < A.nrows(); ++i) {
      const Rat& c = A.rows[i][k];
      if (c > 0)
        pos.push_back(i);
      else if (c < 0)
        neg.push_back(i);
      else
        zer.push_back(i);
    }
    Mat NA(d - 1);
    Vec nb;
    auto push_row = [&](const Vec& full, const Rat& rhs) {
      Vec r(d - 1);
      for (std::size_t j = 0; j < d - 1; ++j) r.e[j] = full[j];
      if (is_zero(r)) {
        if (rhs < 0) return false;  // infeasible combination
        return true;                // trivially satisfied
      }
      NA.add_row(std::move(r));
      nb.e.push_back(rhs);
      return true;
    };
    bool infeasible = false;
    for (std::size_t i : zer)
      if (!push_row(A.rows[i], b[i])) infeasible = true;
    for (std::size_t i : pos) {
      for (std::size_t j : neg) {
        const Rat q = A.rows[i][k];
        const Rat p = -A.rows[j][k];
        const Vec comb = p * A.rows[i] + q * A.rows[j];
        if (!push_row(comb, p * b[i] + q * b[j])) infeasible = true;
        if (NA.nrows() > budget)
          throw EliminationBudgetExceeded("intermediate row count " +
                                          std::to_string(NA.nrows()) +
                                          " exceeds elimination budget");
      }
    }
    if (infeasible) return canonical_empty(keep);

    // Drop rows implied by the rest; scan from the back so removal keeps the
    // remaining indices stable.
    for (std::size_t r = NA.nrows(); r-- > 0;) {
      Polyhedron rest;
      rest.A = Mat(d - 1);
      for (std::size_t i = 0; i < NA.nrows(); ++i) {
        if (i == r) continue;
        rest.A.add_row(NA.rows[i]);
        rest.b.e.push_back(nb[i]);
      }
      SimplexResult mx = poly_opt(rest, NA.rows[r], true);
      const bool redundant =
          (mx.status == LPStatus::OPTIMAL && mx.optimum <= nb[r]) ||
          mx.status == LPStatus::INFEASIBLE;
      if (redundant) {
        NA.rows.erase(NA.rows.begin() + static_cast<std::ptrdiff_t>(r));
        nb.e.erase(nb.e.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
    A = std::move(NA);
    b = std::move(nb);
  }
  return Polyhedron{std::move(A), std::move(b)};
}

Polyhedron cone_hrep(const GenCone& C, std::size_t dim) {
  const std::size_t nc = C.conv_gens.size();
  const std::size_t nr = C.ray_gens.size();
  for (const Vec& g : C.conv_gens)
    if (g.dim() != dim) throw DimensionMismatch("generator dimension mismatch");
  for (const Vec& g : C.ray_gens)
    if (g.dim() != dim) throw DimensionMismatch("generator dimension mismatch");

  // System over (x, lambda, mu): x = sum of weighted generators; eliminate
  // the weights.
  const std::size_t total = dim + nc + nr;
  Polyhedron sys;
  sys.A = Mat(total);
  for (std::size_t i = 0; i < dim; ++i) {
    Vec row(total);
    row.e[i] = Rat(1);
    for (std::size_t j = 0; j < nc; ++j) row.e[dim + j] = -C.conv_gens[j][i];
    for (std::size_t j = 0; j < nr; ++j) row.e[dim + nc + j] = -C.ray_gens[j][i];
    sys.A.add_row(row);
    sys.b.e.push_back(Rat(0));
    sys.A.add_row(-row);
    sys.b.e.push_back(Rat(0));
  }
  if (nc > 0) {
    Vec ones(total);
    for (std::size_t j = 0; j < nc; ++j) ones.e[dim + j] = Rat(1);
    sys.A.add_row(ones);
    sys.b.e.push_back(Rat(1));
    sys.A.add_row(-ones);
    sys.b.e.push_back(Rat(-1));
  }
  for (std::size_t j = 0; j < nc + nr; ++j) {
    sys.A.add_row(-unit_vec(total, dim + j));
    sys.b.e.push_back(Rat(0));
  }
  return fm_project_prefix(sys, dim);
}

PiecewisePolyhedralMapping normal_cone_graph(const Polyhedron& Q) {
  const std::size_t n = Q.dim();
  PiecewisePolyhedralMapping G;
  G.n = n;
  G.m = n;
  for (const FaceDescriptor& F : faces_enumerate(Q)) {
    Polyhedron piece;
    piece.A = Mat(2 * n);
    auto lift_x = [&](const Vec& row, const Rat& rhs) {
      Vec r(2 * n);
      for (std::size_t j = 0; j < n; ++j) r.e[j] = row[j];
      piece.A.add_row(std::move(r));
      piece.b.e.push_back(rhs);
    };
    for (std::size_t i = 0; i < Q.nrows(); ++i) lift_x(Q.A.rows[i], Q.b[i]);
    for (std::size_t i : F.tight) lift_x(-Q.A.rows[i], -Q.b[i]);
    GenCone N;
    for (std::size_t i : F.tight) N.ray_gens.push_back(Q.A.rows[i]);
    const Polyhedron H = cone_hrep(N, n);
    for (std::size_t i = 0; i < H.nrows(); ++i) {
      Vec r(2 * n);
      for (std::size_t j = 0; j < n; ++j) r.e[n + j] = H.A.rows[i][j];
      piece.A.add_row(std::move(r));
      piece.b.e.push_back(H.b[i]);
    }
    G.pieces.push_back(std::move(piece));
  }
  return G;
}

std::vector<Polyhedron> ppm_minimal_identifiable(const PiecewisePolyhedralMapping& G,
                                                 const Vec& xbar, const Vec& vbar) {
  if (xbar.dim() != G.n || vbar.dim() != G.m)
    throw DimensionMismatch("query point dimensions do not match the mapping");
  const Vec p = concat(xbar, vbar);
  std::vector<Polyhedron> out;
  for (const Polyhedron& piece : G.pieces) {
    if (piece.dim() != G.n + G.m)
      throw DimensionMismatch("piece ambient dimension mismatch");
    if (!poly_contains(piece, p)) continue;
    out.push_back(fm_project_prefix(piece, G.n));
  }
  if (out.empty()) throw PairNotInGraph("the pair lies in no piece of the graph");
  return out;
}

}  // namespace idkit
