#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "idkit/errors.hpp"
#include "idkit/rational.hpp"

namespace idkit {

// Dense vector of exact rationals. Dimension is fixed by construction;
// |x|^2 is exactly representable so all norm comparisons are exact.
struct Vec {
  std::vector<Rat> e;

  Vec() = default;
  explicit Vec(std::size_t n) : e(n, Rat(0)) {}
  Vec(std::initializer_list<Rat> init) : e(init) {}
  explicit Vec(std::vector<Rat> v) : e(std::move(v)) {}

  std::size_t dim() const { return e.size(); }
  Rat& operator[](std::size_t i) { return e[i]; }
  const Rat& operator[](std::size_t i) const { return e[i]; }

  bool operator==(const Vec& o) const { return e == o.e; }
  bool operator!=(const Vec& o) const { return !(*this == o); }
};

inline void check_same_dim(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch();
}

inline Vec operator+(const Vec& a, const Vec& b) {
  check_same_dim(a, b);
  Vec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  check_same_dim(a, b);
  Vec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec operator-(const Vec& a) {
  Vec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = -a[i];
  return r;
}

inline Vec operator*(const Rat& s, const Vec& a) {
  Vec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = s * a[i];
  return r;
}

inline Rat dot(const Vec& a, const Vec& b) {
  check_same_dim(a, b);
  Rat s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat norm_sq(const Vec& a) { return dot(a, a); }

inline bool is_zero(const Vec& a) {
  for (const auto& x : a.e)
    if (x != 0) return false;
  return true;
}

inline Vec unit_vec(std::size_t n, std::size_t i, const Rat& s = Rat(1)) {
  Vec r(n);
  r[i] = s;
  return r;
}

inline Vec concat(const Vec& a, const Vec& b) {
  Vec r = a;
  r.e.insert(r.e.end(), b.e.begin(), b.e.end());
  return r;
}

// Dense row-major matrix; the column count is explicit so zero-row
// matrices still know their ambient dimension.
struct Mat {
  std::size_t ncols = 0;
  std::vector<Vec> rows;

  Mat() = default;
  explicit Mat(std::size_t cols) : ncols(cols) {}
  Mat(std::size_t nrows, std::size_t cols) : ncols(cols), rows(nrows, Vec(cols)) {}

  std::size_t nrows() const { return rows.size(); }

  void add_row(Vec r) {
    if (r.dim() != ncols) throw DimensionMismatch();
    rows.push_back(std::move(r));
  }

  bool operator==(const Mat& o) const { return ncols == o.ncols && rows == o.rows; }
};

inline Vec mat_vec(const Mat& A, const Vec& x) {
  if (x.dim() != A.ncols) throw DimensionMismatch();
  Vec r(A.nrows());
  for (std::size_t i = 0; i < A.nrows(); ++i) r[i] = dot(A.rows[i], x);
  return r;
}

// y^T A as a vector of length ncols.
inline Vec vec_mat(const Vec& y, const Mat& A) {
  if (y.dim() != A.nrows()) throw DimensionMismatch();
  Vec r(A.ncols);
  for (std::size_t i = 0; i < A.nrows(); ++i)
    for (std::size_t j = 0; j < A.ncols; ++j) r[j] += y[i] * A.rows[i][j];
  return r;
}

inline Mat transpose(const Mat& A) {
  Mat T(A.nrows());
  T.rows.assign(A.ncols, Vec(A.nrows()));
  for (std::size_t i = 0; i < A.nrows(); ++i)
    for (std::size_t j = 0; j < A.ncols; ++j) T.rows[j][i] = A.rows[i][j];
  return T;
}

}  // namespace idkit
