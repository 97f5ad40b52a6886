#include "idkit/lp.hpp"

#include <cstddef>
#include <utility>

#include "idkit/errors.hpp"

namespace idkit {
namespace {

constexpr long kPivotBudget = 500000;

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Dense exact tableau. Row layout: ncols coefficient entries then the rhs.
// Objective row obj holds reduced costs; obj[ncols] is the negated value, so
// the same pivot arithmetic applies to every row.
struct Tableau {
  std::vector<Vec> row;
  Vec obj;
  std::vector<std::size_t> basis;
  std::size_t ncols = 0;
  long pivots = 0;

  void pivot(std::size_t pr, std::size_t pc) {
    if (++pivots > kPivotBudget)
      throw CyclingGuardExceeded("simplex pivot budget exhausted");
    Vec& pv = row[pr];
    const Rat inv = Rat(1) / pv[pc];
    for (auto& e : pv.e) e *= inv;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i == pr) continue;
      const Rat f = row[i][pc];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= ncols; ++j)
        if (pv[j] != 0) row[i].e[j] -= f * pv[j];
    }
    const Rat f = obj[pc];
    if (f != 0) {
      for (std::size_t j = 0; j <= ncols; ++j)
        if (pv[j] != 0) obj.e[j] -= f * pv[j];
    }
    basis[pr] = pc;
  }

  // Reduced costs for cost vector c given the current basis.
  void reset_objective(const Vec& c) {
    obj = Vec(ncols + 1);
    for (std::size_t j = 0; j < ncols; ++j) obj.e[j] = c[j];
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Rat cb = c[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= ncols; ++j)
        if (row[i][j] != 0) obj.e[j] -= cb * row[i][j];
    }
  }

  // Bland's rule on both choices; terminates without cycling.
  LPStatus run(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < ncols; ++j) {
        if (allowed[j] && obj[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return LPStatus::OPTIMAL;
      std::size_t leave = kNone;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i][enter] <= 0) continue;
        if (leave == kNone) {
          leave = i;
          continue;
        }
        const Rat lhs = row[i][ncols] * row[leave][enter];
        const Rat rhs = row[leave][ncols] * row[i][enter];
        if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
      }
      if (leave == kNone) return LPStatus::UNBOUNDED;
      pivot(leave, enter);
    }
  }

  Rat value() const { return -obj[ncols]; }

  Rat column_value(std::size_t col) const {
    for (std::size_t i = 0; i < row.size(); ++i)
      if (basis[i] == col) return row[i][ncols];
    return Rat(0);
  }
};

}  // namespace

SimplexResult simplex_solve(const LPProblem& p) {
  const std::size_t n = p.c.dim();
  const std::size_t m = p.A.nrows();
  if (p.A.ncols != n)
    throw DimensionMismatch("objective length does not match constraint columns");
  if (p.b.dim() != m)
    throw DimensionMismatch("rhs length does not match constraint rows");
  std::vector<bool> nonneg = p.nonneg;
  if (nonneg.empty()) nonneg.assign(n, false);
  if (nonneg.size() != n)
    throw DimensionMismatch("sign restriction length does not match variables");

  // Column plan: x_j, optional negative part for free variables, slacks,
  // artificials for rows whose rhs is negative.
  std::vector<std::size_t> plus_col(n), minus_col(n, kNone);
  std::size_t col = 0;
  for (std::size_t j = 0; j < n; ++j) {
    plus_col[j] = col++;
    if (!nonneg[j]) minus_col[j] = col++;
  }
  const std::size_t slack_base = col;
  col += m;
  std::vector<int> eps(m, 1);
  std::vector<std::size_t> art_col(m, kNone);
  for (std::size_t i = 0; i < m; ++i)
    if (p.b[i] < 0) {
      eps[i] = -1;
      art_col[i] = col++;
    }
  const std::size_t art_base = slack_base + m;
  const std::size_t ncols = col;

  Tableau t;
  t.ncols = ncols;
  t.row.reserve(m);
  t.basis.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Vec r(ncols + 1);
    for (std::size_t j = 0; j < n; ++j) {
      const Rat a = eps[i] == 1 ? p.A.rows[i][j] : -p.A.rows[i][j];
      if (a == 0) continue;
      r.e[plus_col[j]] = a;
      if (minus_col[j] != kNone) r.e[minus_col[j]] = -a;
    }
    r.e[slack_base + i] = Rat(eps[i]);
    if (art_col[i] != kNone) r.e[art_col[i]] = Rat(1);
    r.e[ncols] = eps[i] == 1 ? p.b[i] : -p.b[i];
    t.row.push_back(std::move(r));
    t.basis.push_back(art_col[i] != kNone ? art_col[i] : slack_base + i);
  }

  std::vector<bool> allowed(ncols, true);

  if (art_base < ncols) {
    Vec c1(ncols);
    for (std::size_t j = art_base; j < ncols; ++j) c1.e[j] = Rat(-1);
    t.reset_objective(c1);
    t.run(allowed);
    if (t.value() != 0) {
      SimplexResult out;
      out.status = LPStatus::INFEASIBLE;
      return out;
    }
    // Drive leftover artificials out of the basis; rows that cannot release
    // one are dependent and get dropped.
    for (std::size_t i = 0; i < t.row.size();) {
      if (t.basis[i] < art_base) {
        ++i;
        continue;
      }
      std::size_t pc = kNone;
      for (std::size_t j = 0; j < art_base; ++j)
        if (t.row[i][j] != 0) {
          pc = j;
          break;
        }
      if (pc == kNone) {
        t.row.erase(t.row.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        t.pivot(i, pc);
        ++i;
      }
    }
    for (std::size_t j = art_base; j < ncols; ++j) allowed[j] = false;
  }

  Vec c2(ncols);
  for (std::size_t j = 0; j < n; ++j) {
    c2.e[plus_col[j]] = p.c[j];
    if (minus_col[j] != kNone) c2.e[minus_col[j]] = -p.c[j];
  }
  t.reset_objective(c2);
  const LPStatus st = t.run(allowed);

  SimplexResult out;
  out.status = st;
  if (st != LPStatus::OPTIMAL) return out;
  out.optimum = t.value();
  out.x = Vec(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.x.e[j] = t.column_value(plus_col[j]);
    if (minus_col[j] != kNone) out.x.e[j] -= t.column_value(minus_col[j]);
  }
  out.y = Vec(m);
  for (std::size_t i = 0; i < m; ++i) out.y.e[i] = -t.obj[slack_base + i];
  return out;
}

bool lp_feasible(const Mat& A, const Vec& b, const std::vector<bool>& nonneg) {
  LPProblem p;
  p.c = Vec(A.ncols);
  p.A = A;
  p.b = b;
  p.nonneg = nonneg;
  return simplex_solve(p).status == LPStatus::OPTIMAL;
}

LPResult lp_solve(const Vec& c, const Mat& A, const Vec& b, bool maximize) {
  const std::size_t n = c.dim();
  if (A.ncols != n)
    throw DimensionMismatch("objective length does not match constraint columns");
  if (b.dim() != A.nrows())
    throw DimensionMismatch("rhs length does not match constraint rows");

  LPProblem base;
  base.c = maximize ? c : -c;
  base.A = A;
  base.b = b;
  SimplexResult first = simplex_solve(base);

  LPResult out;
  out.status = first.status;
  if (first.status != LPStatus::OPTIMAL) return out;
  out.optimum = maximize ? first.optimum : -first.optimum;
  out.dual = first.y;

  // Canonical representative of the optimal face: minimize coordinates in
  // order, fixing each before moving to the next. A coordinate unbounded
  // below is pinned at 0 when feasible, otherwise at its largest value.
  Mat Af = A;
  Vec bf = b;
  Af.add_row(base.c);
  bf.e.push_back(first.optimum);
  Af.add_row(-base.c);
  bf.e.push_back(-first.optimum);

  Vec x(n);
  for (std::size_t j = 0; j < n; ++j) {
    LPProblem sub;
    sub.c = -unit_vec(n, j);
    sub.A = Af;
    sub.b = bf;
    SimplexResult lo = simplex_solve(sub);
    Rat fix;
    if (lo.status == LPStatus::OPTIMAL) {
      fix = -lo.optimum;
    } else {
      sub.c = unit_vec(n, j);
      SimplexResult hi = simplex_solve(sub);
      if (hi.status == LPStatus::OPTIMAL && hi.optimum < 0)
        fix = hi.optimum;
      else
        fix = Rat(0);
    }
    x.e[j] = fix;
    Af.add_row(unit_vec(n, j));
    bf.e.push_back(fix);
    Af.add_row(-unit_vec(n, j));
    bf.e.push_back(-fix);
  }
  out.primal = x;
  return out;
}

}  // namespace idkit
