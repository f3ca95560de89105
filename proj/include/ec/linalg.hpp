#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ec/scalar.hpp"

namespace ec {

using Vec = std::vector<Scalar>;

inline Scalar dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size())
    fail(errc::dimension_mismatch, "dot: " + std::to_string(x.size()) + " vs " +
                                       std::to_string(y.size()));
  Scalar s;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
  return s;
}

inline Vec vec_add(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) fail(errc::dimension_mismatch, "vec_add");
  Vec r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = x[k] + y[k];
  return r;
}

inline Vec vec_sub(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) fail(errc::dimension_mismatch, "vec_sub");
  Vec r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = x[k] - y[k];
  return r;
}

inline Vec vec_neg(const Vec& x) {
  Vec r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = -x[k];
  return r;
}

inline Vec vec_scale(const Scalar& c, const Vec& x) {
  Vec r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = c * x[k];
  return r;
}

inline bool vec_is_zero(const Vec& x) {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}

/// Lexicographic comparison under the exact real ordering.
inline int vec_compare(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) fail(errc::dimension_mismatch, "vec_compare");
  for (std::size_t k = 0; k < x.size(); ++k) {
    int c = Scalar::compare(x[k], y[k]);
    if (c != 0) return c;
  }
  return 0;
}

struct VecLess {
  bool operator()(const Vec& x, const Vec& y) const { return vec_compare(x, y) < 0; }
};

/// True when the first non-zero coordinate is positive. The canonical
/// representative of a +/- pair is the lexicographically positive one.
inline bool lex_positive(const Vec& x) {
  for (const auto& c : x) {
    int s = c.sign();
    if (s != 0) return s > 0;
  }
  return false;
}

inline Vec canonical_rep(const Vec& x) { return lex_positive(x) ? x : vec_neg(x); }

/// Dense matrix of scalars, row-major.
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<Scalar> data;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Scalar& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }

  static Mat from_rows(const std::vector<Vec>& rws) {
    Mat m(rws.size(), rws.empty() ? 0 : rws[0].size());
    for (std::size_t r = 0; r < rws.size(); ++r) {
      if (rws[r].size() != m.cols) fail(errc::dimension_mismatch, "ragged rows");
      for (std::size_t c = 0; c < m.cols; ++c) m(r, c) = rws[r][c];
    }
    return m;
  }

  static Mat from_cols(const std::vector<Vec>& cls) {
    Mat m(cls.empty() ? 0 : cls[0].size(), cls.size());
    for (std::size_t c = 0; c < cls.size(); ++c) {
      if (cls[c].size() != m.rows) fail(errc::dimension_mismatch, "ragged columns");
      for (std::size_t r = 0; r < m.rows; ++r) m(r, c) = cls[c][r];
    }
    return m;
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
    return m;
  }

  Vec row(std::size_t r) const {
    Vec v(cols);
    for (std::size_t c = 0; c < cols; ++c) v[c] = (*this)(r, c);
    return v;
  }

  Vec col(std::size_t c) const {
    Vec v(rows);
    for (std::size_t r = 0; r < rows; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool is_zero() const {
    for (const auto& s : data)
      if (!s.is_zero()) return false;
    return true;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail(errc::dimension_mismatch, "mat add");
    Mat r(x.rows, x.cols);
    for (std::size_t k = 0; k < x.data.size(); ++k) r.data[k] = x.data[k] + y.data[k];
    return r;
  }

  friend Mat operator-(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail(errc::dimension_mismatch, "mat sub");
    Mat r(x.rows, x.cols);
    for (std::size_t k = 0; k < x.data.size(); ++k) r.data[k] = x.data[k] - y.data[k];
    return r;
  }

  friend Mat operator*(const Scalar& c, const Mat& x) {
    Mat r(x.rows, x.cols);
    for (std::size_t k = 0; k < x.data.size(); ++k) r.data[k] = c * x.data[k];
    return r;
  }

  friend Mat operator-(const Mat& x) { return Scalar(-1) * x; }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.data == y.data;
  }
};

/// Lexicographic comparison over entries, row-major.
inline int mat_compare(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) fail(errc::dimension_mismatch, "mat_compare");
  for (std::size_t k = 0; k < x.data.size(); ++k) {
    int c = Scalar::compare(x.data[k], y.data[k]);
    if (c != 0) return c;
  }
  return 0;
}

inline Vec mat_vec(const Mat& m, const Vec& x) {
  if (m.cols != x.size()) fail(errc::dimension_mismatch, "mat_vec");
  Vec r(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    Scalar s;
    for (std::size_t j = 0; j < m.cols; ++j) s += m(i, j) * x[j];
    r[i] = s;
  }
  return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols != b.rows) fail(errc::dimension_mismatch, "mat_mul");
  Mat r(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) {
      Scalar s;
      for (std::size_t k = 0; k < a.cols; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

inline Mat transpose(const Mat& m) {
  Mat r(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r(j, i) = m(i, j);
  return r;
}

inline Vec mat_flatten(const Mat& m) { return m.data; }

inline Mat mat_reshape(const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) fail(errc::dimension_mismatch, "mat_reshape");
  Mat m(rows, cols);
  m.data = v;
  return m;
}

/// Frobenius-style pairing of a constraint functional with a matrix.
inline Scalar mat_inner(const Mat& f, const Mat& m) {
  if (f.rows != m.rows || f.cols != m.cols) fail(errc::dimension_mismatch, "mat_inner");
  Scalar s;
  for (std::size_t k = 0; k < f.data.size(); ++k) s += f.data[k] * m.data[k];
  return s;
}

namespace detail {

// In-place row echelon reduction. Returns pivot (row, col) positions.
inline std::vector<std::pair<std::size_t, std::size_t>> echelon(Mat& a) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t p = r;
    while (p < a.rows && a(p, c).is_zero()) ++p;
    if (p == a.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(r, j), a(p, j));
    Scalar inv = Scalar(1) / a(r, c);
    for (std::size_t j = c; j < a.cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t rank(Mat a) { return detail::echelon(a).size(); }

inline Scalar det(Mat a) {
  if (a.rows != a.cols) fail(errc::dimension_mismatch, "det of non-square matrix");
  Scalar result(1);
  for (std::size_t c = 0; c < a.cols; ++c) {
    std::size_t p = c;
    while (p < a.rows && a(p, c).is_zero()) ++p;
    if (p == a.rows) return Scalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(c, j), a(p, j));
      result = -result;
    }
    result *= a(c, c);
    Scalar inv = Scalar(1) / a(c, c);
    for (std::size_t i = c + 1; i < a.rows; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < a.cols; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return result;
}

/// Unique solution of a square system, or nullopt when singular.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.rows != a.cols || a.rows != b.size()) fail(errc::dimension_mismatch, "solve");
  Mat aug(a.rows, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
    aug(i, a.cols) = b[i];
  }
  auto pivots = detail::echelon(aug);
  if (pivots.size() != a.cols || (!pivots.empty() && pivots.back().second >= a.cols))
    return std::nullopt;
  Vec x(a.cols);
  for (auto [r, c] : pivots) x[c] = aug(r, a.cols);
  return x;
}

/// Any exact solution of a (possibly rectangular) consistent system, with
/// free variables set to zero; nullopt when inconsistent.
inline std::optional<Vec> solve_any(const Mat& a, const Vec& b) {
  if (a.rows != b.size()) fail(errc::dimension_mismatch, "solve_any");
  Mat aug(a.rows, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
    aug(i, a.cols) = b[i];
  }
  auto pivots = detail::echelon(aug);
  for (auto [r, c] : pivots)
    if (c == a.cols) return std::nullopt;  // row 0 = 1
  Vec x(a.cols);
  for (auto [r, c] : pivots) x[c] = aug(r, a.cols);
  return x;
}

inline std::optional<Mat> inverse(const Mat& a) {
  if (a.rows != a.cols) fail(errc::dimension_mismatch, "inverse of non-square matrix");
  std::size_t n = a.rows;
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Scalar(1);
  }
  auto pivots = detail::echelon(aug);
  if (pivots.size() != n) return std::nullopt;
  for (auto [r, c] : pivots)
    if (c >= n) return std::nullopt;
  Mat inv(n, n);
  for (auto [r, c] : pivots)
    for (std::size_t j = 0; j < n; ++j) inv(c, j) = aug(r, n + j);
  return inv;
}

/// Basis of the right kernel { x : a x = 0 }. Vectors are produced for free
/// columns in ascending order, so the first basis vector is deterministic.
inline std::vector<Vec> kernel_basis(Mat a) {
  auto pivots = detail::echelon(a);
  std::vector<bool> is_pivot(a.cols, false);
  for (auto [r, c] : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < a.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(a.cols);
    v[f] = Scalar(1);
    for (auto [r, c] : pivots) v[c] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Indices of a maximal linearly independent subset of the given rows,
/// chosen greedily in row order (stable).
inline std::vector<std::size_t> independent_rows(const std::vector<Vec>& rows) {
  std::vector<std::size_t> chosen;
  std::vector<Vec> reduced;  // echelonized representatives of chosen rows
  for (std::size_t k = 0; k < rows.size(); ++k) {
    Vec v = rows[k];
    for (const Vec& r : reduced) {
      // r is normalized with leading 1 at its pivot
      std::size_t p = 0;
      while (p < r.size() && r[p].is_zero()) ++p;
      if (p < v.size() && !v[p].is_zero()) v = vec_sub(v, vec_scale(v[p], r));
    }
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) continue;
    v = vec_scale(Scalar(1) / v[p], v);
    reduced.push_back(std::move(v));
    chosen.push_back(k);
  }
  return chosen;
}

}  // namespace ec
