#include "idkit/smoothmap.hpp"

#include "idkit/errors.hpp"

namespace idkit {
namespace {

Rat rat_pow(const Rat& x, unsigned e) {
  Rat r(1);
  Rat base = x;
  while (e > 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

}  // namespace

Rat poly_eval(const Polynomial& p, const Vec& x) {
  if (x.dim() != p.nvars) throw DimensionMismatch("polynomial arity mismatch");
  Rat s(0);
  for (const PolyTerm& t : p.terms) {
    Rat term = t.coef;
    for (std::size_t j = 0; j < p.nvars; ++j)
      if (t.exps[j] > 0) term *= rat_pow(x[j], t.exps[j]);
    s += term;
  }
  return s;
}

Polynomial poly_diff(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars) throw DimensionMismatch("differentiation variable out of range");
  Polynomial d;
  d.nvars = p.nvars;
  for (const PolyTerm& t : p.terms) {
    if (t.exps[var] == 0) continue;
    PolyTerm nt = t;
    nt.coef *= Rat(t.exps[var]);
    nt.exps[var] -= 1;
    d.terms.push_back(std::move(nt));
  }
  return d;
}

SmoothMap make_smooth_map(std::vector<Polynomial> components, std::size_t n) {
  SmoothMap F;
  F.n = n;
  F.m = components.size();
  for (const Polynomial& p : components) {
    if (p.nvars != n) throw DimensionMismatch("component arity mismatch");
    for (const PolyTerm& t : p.terms)
      if (t.exps.size() != n) throw DimensionMismatch("term exponent length mismatch");
  }
  F.components = std::move(components);
  return F;
}

Vec smooth_eval(const SmoothMap& F, const Vec& x) {
  Vec y(F.m);
  for (std::size_t i = 0; i < F.m; ++i) y.e[i] = poly_eval(F.components[i], x);
  return y;
}

Mat smooth_jacobian(const SmoothMap& F, const Vec& x) {
  Mat J(F.m, F.n);
  for (std::size_t i = 0; i < F.m; ++i)
    for (std::size_t j = 0; j < F.n; ++j)
      J.rows[i][j] = poly_eval(poly_diff(F.components[i], j), x);
  return J;
}

bool smooth_fd_check(const SmoothMap& F, const Vec& x, double rel_tol) {
  const Rat h = Rat(1) / Rat(1 << 20);
  const Mat J = smooth_jacobian(F, x);
  for (std::size_t j = 0; j < F.n; ++j) {
    Vec xp = x, xm = x;
    xp.e[j] += h;
    xm.e[j] -= h;
    const Vec fp = smooth_eval(F, xp);
    const Vec fm = smooth_eval(F, xm);
    for (std::size_t i = 0; i < F.m; ++i) {
      const Rat fd = (fp[i] - fm[i]) / (2 * h);
      const Rat err = rat_abs(fd - J.rows[i][j]);
      const Rat scale = rat_max(Rat(1), rat_abs(J.rows[i][j]));
      if (rat_to_double(err) > rel_tol * rat_to_double(scale)) return false;
    }
  }
  return true;
}

}  // namespace idkit
