#include "lojax/linalg.hpp"

#include "lojax/error.hpp"

#include <algorithm>

namespace lojax {

int rank(QMat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

int rank(const ZMat& m) {
  QMat q;
  q.reserve(m.size());
  for (const auto& row : m) q.push_back(to_qvec(row));
  return rank(std::move(q));
}

std::optional<QVec> solve_square(QMat a, QVec b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

Int det(ZMat m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;  // exact by Bareiss
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::optional<ZVec> hyperplane_normal(const ZMat& rows, int n) {
  check_internal(static_cast<int>(rows.size()) == n - 1, "hyperplane_normal: need n-1 rows");
  ZVec normal(n);
  bool nonzero = false;
  Int sign = 1;
  for (int skip = 0; skip < n; ++skip) {
    ZMat minor;
    minor.reserve(rows.size());
    for (const auto& row : rows) {
      ZVec r;
      r.reserve(n - 1);
      for (int j = 0; j < n; ++j)
        if (j != skip) r.push_back(row[j]);
      minor.push_back(std::move(r));
    }
    normal[skip] = sign * det(std::move(minor));
    sign = -sign;
    if (normal[skip] != 0) nonzero = true;
  }
  if (!nonzero) return std::nullopt;
  return normal;
}

std::vector<ZVec> nullspace_basis(const ZMat& m, int n) {
  QMat a;
  a.reserve(m.size());
  for (const auto& row : m) {
    check_internal(static_cast<int>(row.size()) == n, "nullspace_basis: bad row width");
    a.push_back(to_qvec(row));
  }
  // Row-reduce and read off free columns.
  const std::size_t rows = a.size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < n && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    Rat p = a[r][c];
    for (int j = 0; j < n; ++j) a[r][j] /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<ZVec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QVec v(n, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free];
    basis.push_back(integral_direction(v));
  }
  return basis;
}

int affine_dim(const std::vector<QVec>& pts) {
  if (pts.empty()) return -1;
  QMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    QVec d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return rank(std::move(diffs));
}

ZVec integral_direction(const QVec& v) {
  Int mult = 1;
  for (const auto& q : v) mult = lcm_int(mult, den(q));
  ZVec z(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    z[i] = num(v[i]) * (mult / den(v[i]));
    g = gcd_int(g, z[i]);
  }
  if (g > 1)
    for (auto& zi : z) zi /= g;
  return z;
}

}  // namespace lojax
