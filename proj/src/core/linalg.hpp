#pragma once

#include <algorithm>
#include <optional>
#include <vector>
#include "core/base.hpp"

namespace hk {

// Prime field element with the modulus carried alongside the value.
// Modulus 0 marks an unattached integer (for generic 0/1 literals); it is
// absorbed by the other operand's modulus.
struct Fp {
  int64_t v = 0;
  int64_t p = 0;

  Fp() = default;
  Fp(int64_t value) : v(value) {}
  Fp(int64_t value, int64_t mod) : v(value), p(mod) {
    require(mod > 0, "modulus must be positive");
    v %= mod;
    if (v < 0) v += mod;
  }

  static int64_t join(int64_t a, int64_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    require(a == b, "mixed moduli");
    return a;
  }
  int64_t reduced(int64_t mod) const {
    if (mod == 0) return v;
    int64_t r = v % mod;
    return r < 0 ? r + mod : r;
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    int64_t m = join(a.p, b.p);
    Fp r;
    r.p = m;
    r.v = a.reduced(m) + b.reduced(m);
    if (m) r.v %= m;
    return r;
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    int64_t m = join(a.p, b.p);
    Fp r;
    r.p = m;
    r.v = a.reduced(m) - b.reduced(m);
    if (m) {
      r.v %= m;
      if (r.v < 0) r.v += m;
    }
    return r;
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    int64_t m = join(a.p, b.p);
    Fp r;
    r.p = m;
    r.v = a.reduced(m) * b.reduced(m);
    if (m) r.v %= m;
    return r;
  }
  Fp operator-() const {
    Fp r = *this;
    r.v = -r.v;
    if (r.p) r.v = r.reduced(r.p);
    return r;
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp inverse() const {
    // values without a modulus are formal integers; only +-1 invert
    if (p == 0) {
      require(v == 1 || v == -1, "inverse needs a modulus");
      return *this;
    }
    int64_t a = reduced(p);
    require(a != 0, "division by zero");
    // Extended Euclid; p is prime in all uses.
    int64_t old_r = a, r = p, old_s = 1, s = 0;
    while (r != 0) {
      int64_t q = old_r / r;
      std::swap(old_r = old_r - q * r, r);
      std::swap(old_s = old_s - q * s, s);
    }
    require(old_r == 1, "element not invertible");
    return Fp(old_s, p);
  }
  friend bool operator==(const Fp& a, const Fp& b) {
    int64_t m = join(a.p, b.p);
    return a.reduced(m) == b.reduced(m);
  }
};

template <class F>
bool is_zero(const F& x) {
  return x == F(0);
}

template <class F>
using Vec = std::vector<F>;

// Dense row-major matrix acting on column vectors.
template <class F>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Vec<F>> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(r, Vec<F>(c, F(0))) {}
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.a[i][i] = F(1);
    return m;
  }
  Vec<F>& operator[](int i) { return a[i]; }
  const Vec<F>& operator[](int i) const { return a[i]; }
  bool operator==(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!(a[i][j] == o.a[i][j])) return false;
    return true;
  }
};

template <class F>
Mat<F> matmul(const Mat<F>& x, const Mat<F>& y) {
  require(x.cols == y.rows, "matmul shape mismatch");
  Mat<F> r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (is_zero(x[i][k])) continue;
      for (int j = 0; j < y.cols; ++j) {
        if (is_zero(y[k][j])) continue;
        r[i][j] = r[i][j] + x[i][k] * y[k][j];
      }
    }
  return r;
}

template <class F>
Vec<F> matvec(const Mat<F>& m, const Vec<F>& v) {
  require(m.cols == static_cast<int>(v.size()), "matvec shape mismatch");
  Vec<F> r(m.rows, F(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      if (is_zero(m[i][j]) || is_zero(v[j])) continue;
      r[i] = r[i] + m[i][j] * v[j];
    }
  return r;
}

template <class F>
Mat<F> mat_add(const Mat<F>& x, const Mat<F>& y) {
  require(x.rows == y.rows && x.cols == y.cols, "shape mismatch");
  Mat<F> r = x;
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r[i][j] = r[i][j] + y[i][j];
  return r;
}

template <class F>
Mat<F> mat_scale(const F& c, const Mat<F>& x) {
  Mat<F> r = x;
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r[i][j] = c * x[i][j];
  return r;
}

// In-place reduced row echelon form; returns pivot column per pivot row.
template <class F>
std::vector<int> rref(Mat<F>& m) {
  std::vector<int> pivots;
  int prow = 0;
  for (int col = 0; col < m.cols && prow < m.rows; ++col) {
    int sel = -1;
    for (int i = prow; i < m.rows; ++i)
      if (!is_zero(m[i][col])) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m.a[prow], m.a[sel]);
    F inv = F(1) / m[prow][col];
    for (int j = col; j < m.cols; ++j) m[prow][j] = inv * m[prow][j];
    for (int i = 0; i < m.rows; ++i) {
      if (i == prow || is_zero(m[i][col])) continue;
      F f = m[i][col];
      for (int j = col; j < m.cols; ++j) m[i][j] = m[i][j] - f * m[prow][j];
    }
    pivots.push_back(col);
    ++prow;
  }
  return pivots;
}

template <class F>
int rank(Mat<F> m) {
  return static_cast<int>(rref(m).size());
}

// Basis of {x : m x = 0}, canonical from the RREF (one vector per free
// column, in ascending free-column order).
template <class F>
std::vector<Vec<F>> kernel_basis(Mat<F> m) {
  std::vector<int> pivots = rref(m);
  std::vector<int> pivot_of_col(m.cols, -1);
  for (size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = static_cast<int>(i);
  std::vector<Vec<F>> basis;
  for (int col = 0; col < m.cols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    Vec<F> v(m.cols, F(0));
    v[col] = F(1);
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = F(0) - m[static_cast<int>(i)][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve m x = b; empty optional when inconsistent.
template <class F>
std::optional<Vec<F>> solve_linear(Mat<F> m, const Vec<F>& b) {
  require(m.rows == static_cast<int>(b.size()), "rhs length mismatch");
  Mat<F> aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug[i][j] = m[i][j];
    aug[i][m.cols] = b[i];
  }
  std::vector<int> pivots = rref(aug);
  for (int c : pivots)
    if (c == m.cols) return std::nullopt;
  Vec<F> x(m.cols, F(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[static_cast<int>(i)][m.cols];
  return x;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
  require(m.rows == m.cols, "inverse of non-square matrix");
  int n = m.rows;
  Mat<F> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = F(1);
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1)
    return std::nullopt;
  Mat<F> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

// Rows spanning a subspace -> canonical RREF basis rows (zero rows dropped).
template <class F>
Mat<F> row_space_basis(Mat<F> m) {
  std::vector<int> pivots = rref(m);
  Mat<F> out(static_cast<int>(pivots.size()), m.cols);
  for (int i = 0; i < out.rows; ++i) out[i] = m[i];
  return out;
}

// Intersection of the kernels of a family of square matrices, as a list of
// column vectors.
template <class F>
std::vector<Vec<F>> kernel_intersection(const std::vector<Mat<F>>& ms, int dim) {
  if (ms.empty()) {
    std::vector<Vec<F>> full;
    for (int i = 0; i < dim; ++i) {
      Vec<F> v(dim, F(0));
      v[i] = F(1);
      full.push_back(std::move(v));
    }
    return full;
  }
  int total = 0;
  for (const auto& m : ms) {
    require(m.cols == dim, "kernel_intersection: width mismatch");
    total += m.rows;
  }
  Mat<F> stacked(total, dim);
  int r = 0;
  for (const auto& m : ms)
    for (int i = 0; i < m.rows; ++i) stacked[r++] = m[i];
  return kernel_basis(std::move(stacked));
}

// Incrementally maintained row space in reduced echelon form.  Pivot columns
// strictly increase down the rows; every row is normalized with leading 1 and
// pivot columns are clean.
template <class F>
struct Echelon {
  int ncols;
  std::vector<Vec<F>> rows;
  std::vector<int> pivots;

  explicit Echelon(int nc) : ncols(nc) {}
  int rank() const { return static_cast<int>(rows.size()); }

  Vec<F> reduce(Vec<F> v) const {
    require(static_cast<int>(v.size()) == ncols, "echelon width mismatch");
    for (size_t k = 0; k < rows.size(); ++k) {
      F c = v[pivots[k]];
      if (is_zero(c)) continue;
      for (int j = pivots[k]; j < ncols; ++j) v[j] = v[j] - c * rows[k][j];
    }
    return v;
  }

  bool contains(const Vec<F>& v) const {
    Vec<F> r = reduce(v);
    for (const auto& x : r)
      if (!is_zero(x)) return false;
    return true;
  }

  // Absorbs v; true when the rank grew.
  bool add(const Vec<F>& v) {
    Vec<F> r = reduce(v);
    int c = -1;
    for (int j = 0; j < ncols; ++j)
      if (!is_zero(r[j])) {
        c = j;
        break;
      }
    if (c < 0) return false;
    F inv = F(1) / r[c];
    for (int j = c; j < ncols; ++j) r[j] = inv * r[j];
    for (size_t k = 0; k < rows.size(); ++k) {
      F f = rows[k][c];
      if (is_zero(f)) continue;
      for (int j = c; j < ncols; ++j) rows[k][j] = rows[k][j] - f * r[j];
    }
    auto it = std::upper_bound(pivots.begin(), pivots.end(), c);
    size_t at = static_cast<size_t>(it - pivots.begin());
    pivots.insert(it, c);
    rows.insert(rows.begin() + at, std::move(r));
    return true;
  }
};

// Coordinates of each column of t in the given basis columns, or nullopt if
// some column lies outside the span.
template <class F>
std::optional<Mat<F>> in_basis(const std::vector<Vec<F>>& basis,
                               const std::vector<Vec<F>>& targets) {
  int d = basis.empty() ? (targets.empty() ? 0 : static_cast<int>(targets[0].size()))
                        : static_cast<int>(basis[0].size());
  int k = static_cast<int>(basis.size()), m = static_cast<int>(targets.size());
  Mat<F> aug(d, k + m);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < d; ++i) aug[i][j] = basis[j][i];
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < d; ++i) aug[i][k + j] = targets[j][i];
  std::vector<int> pivots = rref(aug);
  for (int c : pivots)
    if (c >= k) return std::nullopt;
  Mat<F> coords(k, m);
  for (size_t i = 0; i < pivots.size(); ++i)
    for (int j = 0; j < m; ++j) coords[pivots[i]][j] = aug[static_cast<int>(i)][k + j];
  return coords;
}

}  // namespace hk
