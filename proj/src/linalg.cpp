#include "versalkit/linalg.hpp"

#include <stdexcept>

namespace vk {

bool is_zero(const Vec& v) {
  for (int x : v)
    if (x) return false;
  return true;
}

void axpy(const Field& k, int c, const Vec& x, Vec& y) {
  if (c == 0) return;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i]) y[i] = k.add(y[i], k.mul(c, x[i]));
}

Vec scaled(const Field& k, int c, const Vec& x) {
  Vec r(x.size(), 0);
  for (size_t i = 0; i < x.size(); ++i) r[i] = k.mul(c, x[i]);
  return r;
}

Vec unit_vector(int n, int i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

Matrix identity_matrix(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix mat_mul(const Field& k, const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int l = 0; l < x.cols; ++l) {
      int a = x(i, l);
      if (!a) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y(l, j)) r(i, j) = k.add(r(i, j), k.mul(a, y(l, j)));
    }
  return r;
}

Matrix mat_add(const Field& k, const Matrix& x, const Matrix& y) {
  Matrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = k.add(x.a[i], y.a[i]);
  return r;
}

Matrix mat_scale(const Field& k, int c, const Matrix& x) {
  Matrix r = x;
  for (auto& v : r.a) v = k.mul(c, v);
  return r;
}

Matrix transpose(const Matrix& x) {
  Matrix r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
  return r;
}

Vec mat_vec(const Field& k, const Matrix& x, const Vec& v) {
  Vec r(x.rows, 0);
  for (int i = 0; i < x.rows; ++i) {
    int s = 0;
    for (int j = 0; j < x.cols; ++j)
      if (x(i, j) && v[j]) s = k.add(s, k.mul(x(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

std::optional<Matrix> inverse(const Field& k, const Matrix& x) {
  int n = x.rows;
  if (x.cols != n) return std::nullopt;
  Matrix a = x;
  Matrix b = identity_matrix(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a(r, c)) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(b(piv, j), b(c, j));
      }
    int s = k.inv(a(c, c));
    for (int j = 0; j < n; ++j) {
      a(c, j) = k.mul(s, a(c, j));
      b(c, j) = k.mul(s, b(c, j));
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || !a(r, c)) continue;
      int f = k.neg(a(r, c));
      for (int j = 0; j < n; ++j) {
        a(r, j) = k.add(a(r, j), k.mul(f, a(c, j)));
        b(r, j) = k.add(b(r, j), k.mul(f, b(c, j)));
      }
    }
  }
  return b;
}

Matrix kronecker(const Field& k, const Matrix& x, const Matrix& y) {
  Matrix r(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j)
      for (int u = 0; u < y.rows; ++u)
        for (int v = 0; v < y.cols; ++v) r(i * y.rows + u, j * y.cols + v) = k.mul(x(i, j), y(u, v));
  return r;
}

EchelonSpace::EchelonSpace(const Field& k, int n) : k_(k), n_(n), rank_of_(n) {
  for (int i = 0; i < n; ++i) rank_of_[i] = i;
}

EchelonSpace::EchelonSpace(const Field& k, int n, const std::vector<int>& priority) : k_(k), n_(n), rank_of_(n, n) {
  int r = 0;
  for (int c : priority) rank_of_[c] = r++;
  for (int c = 0; c < n; ++c)
    if (rank_of_[c] == n) rank_of_[c] = r++;
}

Vec EchelonSpace::reduce(const Vec& v) const {
  Vec r = v;
  for (size_t i = 0; i < rows_.size(); ++i) {
    int c = r[pivots_[i]];
    if (c) axpy(k_, k_.neg(c), rows_[i], r);
  }
  return r;
}

bool EchelonSpace::add(const Vec& v) {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("vector length mismatch");
  Vec r = reduce(v);
  int best = -1;
  for (int c = 0; c < n_; ++c)
    if (r[c] && (best < 0 || rank_of_[c] < rank_of_[best])) best = c;
  if (best < 0) return false;
  r = scaled(k_, k_.inv(r[best]), r);
  for (auto& row : rows_) {
    int c = row[best];
    if (c) axpy(k_, k_.neg(c), r, row);
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(best);
  return true;
}

int rank(const Field& k, const std::vector<Vec>& rows, int ncols) {
  EchelonSpace s(k, ncols);
  for (const auto& r : rows) s.add(r);
  return s.dim();
}

std::vector<Vec> nullspace(const Field& k, const std::vector<Vec>& rows, int ncols) {
  EchelonSpace s(k, ncols);
  for (const auto& r : rows) s.add(r);
  std::vector<char> is_pivot(ncols, 0);
  for (int p : s.pivots()) is_pivot[p] = 1;
  std::vector<Vec> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vec x(ncols, 0);
    x[f] = 1;
    for (size_t i = 0; i < s.rows().size(); ++i) x[s.pivots()[i]] = k.neg(s.rows()[i][f]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> solve_combination(const Field& k, const std::vector<Vec>& columns, const Vec& target) {
  int m = static_cast<int>(columns.size());
  int n = static_cast<int>(target.size());
  // rows of the augmented system [columns | target]
  std::vector<Vec> rows(n, Vec(m + 1, 0));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) rows[i][j] = columns[j][i];
  for (int i = 0; i < n; ++i) rows[i][m] = k.neg(target[i]);
  auto ns = nullspace(k, rows, m + 1);
  for (const auto& x : ns) {
    if (x[m] == 0) continue;
    int s = k.inv(x[m]);
    Vec a(m);
    for (int j = 0; j < m; ++j) a[j] = k.mul(s, x[j]);
    return a;
  }
  return std::nullopt;
}

bool same_span(const Field& k, const std::vector<Vec>& a, const std::vector<Vec>& b, int n) {
  EchelonSpace sa(k, n);
  for (const auto& v : a) sa.add(v);
  for (const auto& v : b)
    if (!sa.contains(v)) return false;
  return rank(k, b, n) == sa.dim();
}

}  // namespace vk
