#pragma once

#include <optional>
#include <vector>

#include "versalkit/field.hpp"

namespace vk {

using Vec = std::vector<int>;

bool is_zero(const Vec& v);
// y += c * x
void axpy(const Field& k, int c, const Vec& x, Vec& y);
Vec scaled(const Field& k, int c, const Vec& x);
Vec unit_vector(int n, int i);

// Dense row-major matrix over a field.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  int operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const Matrix& o) const = default;
};

Matrix identity_matrix(int n);
Matrix mat_mul(const Field& k, const Matrix& x, const Matrix& y);
Matrix mat_add(const Field& k, const Matrix& x, const Matrix& y);
Matrix mat_scale(const Field& k, int c, const Matrix& x);
Matrix transpose(const Matrix& x);
Vec mat_vec(const Field& k, const Matrix& x, const Vec& v);
std::optional<Matrix> inverse(const Field& k, const Matrix& x);
Matrix kronecker(const Field& k, const Matrix& x, const Matrix& y);

// Subspace of k^n kept in reduced row echelon form. The pivot of a new row is
// the first column, in the given priority order, where it is nonzero.
class EchelonSpace {
 public:
  EchelonSpace(const Field& k, int n);
  EchelonSpace(const Field& k, int n, const std::vector<int>& priority);

  // returns true when v was not already in the span
  bool add(const Vec& v);
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return n_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const Field& field() const { return k_; }

 private:
  Field k_;
  int n_;
  std::vector<int> rank_of_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

int rank(const Field& k, const std::vector<Vec>& rows, int ncols);
// basis of {x : r.x = 0 for every row r}
std::vector<Vec> nullspace(const Field& k, const std::vector<Vec>& rows, int ncols);
// coefficients a with sum a_i * columns[i] = target, if any
std::optional<Vec> solve_combination(const Field& k, const std::vector<Vec>& columns, const Vec& target);
// true when the spans coincide
bool same_span(const Field& k, const std::vector<Vec>& a, const std::vector<Vec>& b, int n);

}  // namespace vk
