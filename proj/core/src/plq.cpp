#include "idkit/plq.hpp"

#include <optional>
#include <utility>

#include "idkit/errors.hpp"
#include "idkit/linsolve.hpp"
#include "idkit/lp.hpp"

namespace idkit {
namespace {

bool is_symmetric(const Mat& P) {
  if (P.nrows() != P.ncols) return false;
  for (std::size_t i = 0; i < P.nrows(); ++i)
    for (std::size_t j = i + 1; j < P.ncols; ++j)
      if (P.rows[i][j] != P.rows[j][i]) return false;
  return true;
}

Rat cell_value(const PLQCell& c, const Vec& x) {
  return dot(x, mat_vec(c.P, x)) / 2 + dot(c.q, x) + c.r;
}

Vec cell_gradient(const PLQCell& c, const Vec& x) { return mat_vec(c.P, x) + c.q; }

// Deterministic representative point of a nonempty polyhedron.
std::optional<Vec> canonical_point(const Polyhedron& Q) {
  const LPResult r = lp_solve(Vec(Q.dim()), Q.A, Q.b, true);
  if (r.status != LPStatus::OPTIMAL) return std::nullopt;
  return r.primal;
}

// Continuity of the difference quadratic on the affine hull of B, checked
// symbolically through a parametrization of the hull.
bool difference_vanishes(const PLQCell& ci, const PLQCell& cj, const Polyhedron& B,
                         const Vec& x0, const std::vector<Vec>& V) {
  const std::size_t n = B.dim();
  Mat DP(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) DP.rows[a][b] = ci.P.rows[a][b] - cj.P.rows[a][b];
  const Vec Dq = ci.q - cj.q;
  const Rat Dr = ci.r - cj.r;

  const Rat d0 = dot(x0, mat_vec(DP, x0)) / 2 + dot(Dq, x0) + Dr;
  if (d0 != 0) return false;
  const Vec lin = mat_vec(DP, x0) + Dq;
  for (const Vec& v : V) {
    if (dot(lin, v) != 0) return false;
    for (const Vec& w : V)
      if (dot(v, mat_vec(DP, w)) != 0) return false;
  }
  return true;
}

}  // namespace

bool plq_psd(const Mat& P) {
  if (P.nrows() != P.ncols) return false;
  const std::size_t n = P.nrows();
  Mat W = P;
  std::vector<bool> active(n, true);
  for (;;) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      if (W.rows[i][i] < 0) return false;
      if (W.rows[i][i] == 0) {
        for (std::size_t j = 0; j < n; ++j)
          if (active[j] && W.rows[i][j] != 0) return false;
        active[i] = false;
        continue;
      }
      if (pivot == n) pivot = i;
    }
    if (pivot == n) return true;  // nothing left with positive diagonal
    const Rat d = W.rows[pivot][pivot];
    for (std::size_t j = 0; j < n; ++j) {
      if (!active[j] || j == pivot) continue;
      const Rat f = W.rows[j][pivot] / d;
      if (f == 0) continue;
      for (std::size_t l = 0; l < n; ++l)
        if (active[l]) W.rows[j][l] -= f * W.rows[pivot][l];
    }
    active[pivot] = false;
  }
}

PLQFunction make_plq(std::vector<PLQCell> cells) {
  if (cells.empty()) throw ParseError("a piecewise function needs at least one cell");
  const std::size_t n = cells[0].cell.dim();
  for (const PLQCell& c : cells) {
    if (c.cell.dim() != n || c.q.dim() != n || c.P.ncols != n || c.P.nrows() != n)
      throw DimensionMismatch("cell data dimension mismatch");
    if (!is_symmetric(c.P)) throw ParseError("cell matrix is not symmetric");
    if (poly_empty(c.cell)) throw ParseError("empty cell");
  }

  PLQFunction f;
  f.cells = std::move(cells);

  bool ok = true;
  for (const PLQCell& c : f.cells)
    if (!plq_psd(c.P)) ok = false;

  // The facet-jump criterion below covers full-dimensional subdivisions; a
  // multi-cell function with a lower-dimensional cell stays uncertified.
  if (f.cells.size() > 1) {
    for (const PLQCell& c : f.cells) {
      Mat E(n);
      for (std::size_t e : implied_equalities(c.cell)) E.add_row(c.cell.A.rows[e]);
      if (mat_rank(E) > 0) ok = false;
    }
  }

  for (std::size_t i = 0; ok && i < f.cells.size(); ++i) {
    for (std::size_t j = i + 1; ok && j < f.cells.size(); ++j) {
      const Polyhedron B = poly_intersect(f.cells[i].cell, f.cells[j].cell);
      const auto x0 = canonical_point(B);
      if (!x0) continue;  // disjoint cells
      Mat E(n);
      for (std::size_t e : implied_equalities(B)) E.add_row(B.A.rows[e]);
      const std::vector<Vec> V = null_space(E);
      if (!difference_vanishes(f.cells[i], f.cells[j], B, *x0, V)) {
        ok = false;
        break;
      }
      if (n >= 1 && V.size() == n - 1) {
        // Shared facet: the gradient jump across it must point from cell i
        // toward cell j when crossing that way.
        Mat VM(n);
        for (const Vec& v : V) VM.add_row(v);
        const std::vector<Vec> nu = null_space(VM);
        if (nu.size() != 1) continue;
        Vec normal = nu[0];
        // Orient by which side each cell occupies; a cell crossing the
        // hyperplane means this is not a subdivision facet.
        const Rat beta = dot(normal, *x0);
        auto extent = [&](const Polyhedron& C, bool maximize) -> std::optional<Rat> {
          LPProblem p;
          p.c = maximize ? normal : -normal;
          p.A = C.A;
          p.b = C.b;
          const SimplexResult r = simplex_solve(p);
          if (r.status != LPStatus::OPTIMAL) return std::nullopt;
          return maximize ? r.optimum : -r.optimum;
        };
        const auto Mi = extent(f.cells[i].cell, true);
        const auto mi = extent(f.cells[i].cell, false);
        const auto Mj = extent(f.cells[j].cell, true);
        const auto mj = extent(f.cells[j].cell, false);
        const bool i_below = Mi && *Mi == beta;
        const bool i_above = mi && *mi == beta;
        const bool j_below = Mj && *Mj == beta;
        const bool j_above = mj && *mj == beta;
        if (i_below && j_above) {
          // keep orientation
        } else if (i_above && j_below) {
          normal = -normal;
        } else {
          ok = false;
          break;
        }
        // min over B of <(P_j - P_i) x + (q_j - q_i), normal>
        Vec c(n);
        for (std::size_t a = 0; a < n; ++a) {
          Rat s(0);
          for (std::size_t b = 0; b < n; ++b)
            s += (f.cells[j].P.rows[b][a] - f.cells[i].P.rows[b][a]) * normal[b];
          c.e[a] = s;
        }
        const Rat c0 = dot(f.cells[j].q - f.cells[i].q, normal);
        LPProblem p;
        p.c = -c;
        p.A = B.A;
        p.b = B.b;
        const SimplexResult r = simplex_solve(p);
        if (r.status != LPStatus::OPTIMAL || -r.optimum + c0 < 0) {
          ok = false;
          break;
        }
      }
    }
  }
  f.convex_certified = ok;
  return f;
}

std::optional<Rat> plq_value(const PLQFunction& f, const Vec& x) {
  for (const PLQCell& c : f.cells)
    if (poly_contains(c.cell, x)) return cell_value(c, x);
  return std::nullopt;
}

std::vector<std::size_t> plq_cells_at(const PLQFunction& f, const Vec& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.cells.size(); ++i)
    if (poly_contains(f.cells[i].cell, x)) out.push_back(i);
  return out;
}

std::vector<Vec> plq_gradients_at(const PLQFunction& f, const Vec& x) {
  const auto cs = plq_cells_at(f, x);
  if (cs.empty()) throw PointNotInDomain("no cell contains the point");
  std::vector<Vec> out;
  for (std::size_t i : cs) out.push_back(cell_gradient(f.cells[i], x));
  return out;
}

bool plq_subgradient_member(const PLQFunction& f, const Vec& x, const Vec& v) {
  const auto cs = plq_cells_at(f, x);
  if (cs.empty()) throw PointNotInDomain("no cell contains the point");
  const std::size_t n = f.dim();
  if (v.dim() != n) throw DimensionMismatch("candidate dimension mismatch");

  // Variables: theta (one per active cell), u in R^n, then one multiplier
  // block per active cell. v = sum theta_c grad_c + u with u written as a
  // nonnegative combination of each active cell's tight rows.
  const std::size_t k = cs.size();
  std::vector<std::vector<std::size_t>> act;
  std::size_t nmu = 0;
  for (std::size_t i : cs) {
    act.push_back(active_set(f.cells[i].cell, x));
    nmu += act.back().size();
  }
  const std::size_t nv = k + n + nmu;
  Mat A(nv);
  Vec b;
  std::vector<bool> mask(nv, true);
  for (std::size_t j = 0; j < n; ++j) mask[k + j] = false;  // u is free

  for (std::size_t coord = 0; coord < n; ++coord) {
    Vec row(nv);
    for (std::size_t t = 0; t < k; ++t)
      row.e[t] = cell_gradient(f.cells[cs[t]], x)[coord];
    row.e[k + coord] = Rat(1);
    A.add_row(row);
    b.e.push_back(v[coord]);
    A.add_row(-row);
    b.e.push_back(-v[coord]);
  }
  {
    Vec ones(nv);
    for (std::size_t t = 0; t < k; ++t) ones.e[t] = Rat(1);
    A.add_row(ones);
    b.e.push_back(Rat(1));
    A.add_row(-ones);
    b.e.push_back(Rat(-1));
  }
  std::size_t mu_base = k + n;
  for (std::size_t t = 0; t < k; ++t) {
    const Polyhedron& cell = f.cells[cs[t]].cell;
    for (std::size_t coord = 0; coord < n; ++coord) {
      Vec row(nv);
      row.e[k + coord] = Rat(1);
      for (std::size_t a = 0; a < act[t].size(); ++a)
        row.e[mu_base + a] = -cell.A.rows[act[t][a]][coord];
      A.add_row(row);
      b.e.push_back(Rat(0));
      A.add_row(-row);
      b.e.push_back(Rat(0));
    }
    mu_base += act[t].size();
  }
  return lp_feasible(A, b, mask);
}

Vec prox(const PLQFunction& f, const Rat& lambda, const Vec& z) {
  if (!f.convex_certified)
    throw NotConvex("prox requires a certified-convex function");
  if (lambda <= 0) throw ParseError("prox parameter must be positive");
  if (z.dim() != f.dim()) throw DimensionMismatch("point dimension mismatch");
  const std::size_t n = f.dim();

  std::optional<std::pair<Rat, Vec>> best;
  for (const PLQCell& c : f.cells) {
    Mat M(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) M.rows[i][j] = c.P.rows[i][j];
      M.rows[i][i] += Rat(1) / lambda;
    }
    const Vec rhs0 = (Rat(1) / lambda) * z - c.q;
    for (const FaceDescriptor& F : faces_enumerate(c.cell)) {
      const std::size_t k = F.tight.size();
      // Stationarity on the face's affine hull: [M A_S^T; A_S 0].
      Mat K(n + k, n + k);
      Vec rhs(n + k);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) K.rows[i][j] = M.rows[i][j];
        for (std::size_t a = 0; a < k; ++a)
          K.rows[i][n + a] = c.cell.A.rows[F.tight[a]][i];
        rhs.e[i] = rhs0[i];
      }
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t j = 0; j < n; ++j)
          K.rows[n + a][j] = c.cell.A.rows[F.tight[a]][j];
        rhs.e[n + a] = c.cell.b[F.tight[a]];
      }
      const auto sol = solve_linear(K, rhs);
      if (!sol.consistent()) continue;
      Vec y(n);
      for (std::size_t i = 0; i < n; ++i) y.e[i] = (*sol.solution)[i];
      if (!poly_contains(c.cell, y)) continue;
      const Rat obj = cell_value(c, y) + norm_sq(y - z) / (2 * lambda);
      if (!best || obj < best->first) best = {obj, y};
    }
  }
  return best->second;
}

}  // namespace idkit
