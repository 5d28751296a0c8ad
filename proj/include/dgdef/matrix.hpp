#ifndef DGDEF_MATRIX_HPP
#define DGDEF_MATRIX_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include "dgdef/errors.hpp"
#include "dgdef/field.hpp"

namespace dgdef {

template <class K>
using Vec = std::vector<K>;

template <class K>
bool vec_is_zero(const Vec<K>& v) {
  for (const auto& x : v)
    if (!(x == K(0))) return false;
  return true;
}

template <class K>
Vec<K> vec_add(const Vec<K>& a, const Vec<K>& b) {
  internal_check(a.size() == b.size(), "vec_add: size mismatch");
  Vec<K> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <class K>
Vec<K> vec_sub(const Vec<K>& a, const Vec<K>& b) {
  internal_check(a.size() == b.size(), "vec_sub: size mismatch");
  Vec<K> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class K>
Vec<K> vec_scale(const K& c, const Vec<K>& a) {
  Vec<K> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

template <class K>
void vec_axpy(Vec<K>& acc, const K& c, const Vec<K>& a) {
  internal_check(acc.size() == a.size(), "vec_axpy: size mismatch");
  for (size_t i = 0; i < a.size(); ++i) acc[i] += c * a[i];
}

template <class K>
Vec<K> unit_vec(int n, int i) {
  Vec<K> v(n, K(0));
  v[i] = K(1);
  return v;
}

// Dense matrix over an exact field, row major.
template <class K>
class Matrix {
  int rows_ = 0, cols_ = 0;
  std::vector<K> a_;

 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, K(0)) {
    internal_check(rows >= 0 && cols >= 0, "matrix dims must be nonnegative");
  }
  Matrix(int rows, int cols, std::initializer_list<K> vals) : Matrix(rows, cols) {
    internal_check((int)vals.size() == rows * cols, "initializer size mismatch");
    std::copy(vals.begin(), vals.end(), a_.begin());
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Matrix zero(int r, int c) { return Matrix(r, c); }
  static Matrix from_rows(const std::vector<Vec<K>>& rows, int cols) {
    Matrix m((int)rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      internal_check((int)rows[i].size() == cols, "from_rows: bad row length");
      for (int j = 0; j < cols; ++j) m((int)i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_cols(const std::vector<Vec<K>>& cols, int rows) {
    Matrix m(rows, (int)cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      internal_check((int)cols[j].size() == rows, "from_cols: bad column length");
      for (int i = 0; i < rows; ++i) m(i, (int)j) = cols[j][i];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Vec<K> row(int i) const {
    Vec<K> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  Vec<K> col(int j) const {
    Vec<K> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_row(int i, const Vec<K>& r) {
    internal_check((int)r.size() == cols_, "set_row: bad length");
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }
  void set_col(int j, const Vec<K>& c) {
    internal_check((int)c.size() == rows_, "set_col: bad length");
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!(x == K(0))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    internal_check(a.cols_ == b.rows_, "matrix product: inner dims differ");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const K& x = a(i, k);
        if (x == K(0)) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    internal_check(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum: shape mismatch");
    Matrix c = a;
    for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    internal_check(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference: shape mismatch");
    Matrix c = a;
    for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
  }
  friend Matrix operator*(const K& c, const Matrix& a) {
    Matrix m = a;
    for (auto& x : m.a_) x = c * x;
    return m;
  }
  friend Vec<K> operator*(const Matrix& a, const Vec<K>& v) {
    internal_check(a.cols_ == (int)v.size(), "matrix-vector product: dims differ");
    Vec<K> r(a.rows_, K(0));
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) {
        if (a(i, j) == K(0)) continue;
        r[i] += a(i, j) * v[j];
      }
    return r;
  }
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
};

// Reduced row echelon form. Pivoting is deterministic: columns scanned left to
// right, within a column the first nonzero row from the top is the pivot. All
// echelon bases and canonical representatives in the library descend from this
// rule, which makes reports byte-for-byte reproducible.
template <class K>
struct RrefResult {
  Matrix<K> mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};

template <class K>
RrefResult<K> rref(Matrix<K> m) {
  RrefResult<K> res;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!(m(i, c) == K(0))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    K inv = K(1) / m(r, c);
    for (int j = 0; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == K(0)) continue;
      K f = m(i, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  res.mat = std::move(m);
  return res;
}

template <class K>
int rank(const Matrix<K>& m) {
  return rref(m).rank;
}

// Kernel basis in echelon-canonical form: one vector per free column, with a 1
// at that column, listed in increasing column order.
template <class K>
std::vector<Vec<K>> kernel_basis(const Matrix<K>& m) {
  RrefResult<K> r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec<K>> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec<K> v(m.cols(), K(0));
    v[c] = K(1);
    for (int i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.mat(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Result of solving A x = b exactly.
template <class K>
struct LinearSolution {
  bool solvable = false;
  Vec<K> particular;             // a solution when solvable
  std::vector<Vec<K>> kernel;    // basis of {x : A x = 0}
};

template <class K>
LinearSolution<K> solve_linear(const Matrix<K>& a, const Vec<K>& b) {
  if ((int)b.size() != a.rows()) throw PreconditionError("solve_linear: dimension mismatch");
  Matrix<K> aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult<K> r = rref(aug);
  LinearSolution<K> sol;
  for (int c : r.pivot_cols)
    if (c == a.cols()) return sol;  // row (0 ... 0 | 1): inconsistent
  sol.solvable = true;
  sol.particular.assign(a.cols(), K(0));
  for (int i = 0; i < (int)r.pivot_cols.size(); ++i)
    sol.particular[r.pivot_cols[i]] = r.mat(i, a.cols());
  sol.kernel = kernel_basis(a);
  return sol;
}

// Basis of the column space: the columns of A at rref pivot positions.
template <class K>
std::vector<Vec<K>> column_space_basis(const Matrix<K>& a) {
  RrefResult<K> r = rref(a);
  std::vector<Vec<K>> basis;
  for (int c : r.pivot_cols) basis.push_back(a.col(c));
  return basis;
}

// A growing subspace kept in reduced row echelon form.
template <class K>
class RowSpace {
  int ambient_ = 0;
  std::vector<Vec<K>> rows_;      // rref rows
  std::vector<int> pivots_;

 public:
  RowSpace() = default;
  explicit RowSpace(int ambient) : ambient_(ambient) {}

  int ambient() const { return ambient_; }
  int dim() const { return (int)rows_.size(); }
  const std::vector<Vec<K>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Reduce v against the stored rows; the residue is zero iff v is a member.
  Vec<K> reduce(Vec<K> v) const {
    internal_check((int)v.size() == ambient_, "RowSpace::reduce: bad vector length");
    for (size_t i = 0; i < rows_.size(); ++i) {
      const K& c = v[pivots_[i]];
      if (c == K(0)) continue;
      vec_axpy(v, -c, rows_[i]);
    }
    return v;
  }

  bool contains(const Vec<K>& v) const { return vec_is_zero(reduce(v)); }

  // Insert v; returns true if the space grew. The new row is normalized and
  // existing rows are back-reduced, keeping the basis in rref.
  bool insert(const Vec<K>& v) {
    Vec<K> r = reduce(v);
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!(r[j] == K(0))) {
        p = j;
        break;
      }
    if (p < 0) return false;
    Vec<K> nr = vec_scale(K(1) / r[p], r);
    for (size_t i = 0; i < rows_.size(); ++i) {
      const K& c = rows_[i][p];
      if (!(c == K(0))) vec_axpy(rows_[i], -c, nr);
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(nr));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  void insert_all(const std::vector<Vec<K>>& vs) {
    for (const auto& v : vs) insert(v);
  }

  // Standard basis indices not used as pivots: a canonical complement.
  std::vector<int> complement_indices() const {
    std::vector<bool> piv(ambient_, false);
    for (int p : pivots_) piv[p] = true;
    std::vector<int> res;
    for (int j = 0; j < ambient_; ++j)
      if (!piv[j]) res.push_back(j);
    return res;
  }
};

// Kronecker index of a basis pair: (a, b) -> a * dim_b + b.
inline int kron(int a_idx, int b_dim, int b_idx) { return a_idx * b_dim + b_idx; }

// Kronecker product of coordinate vectors, matching kron() indexing.
template <class K>
Vec<K> vec_kron(const Vec<K>& a, const Vec<K>& b) {
  Vec<K> r(a.size() * b.size(), K(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == K(0)) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

}  // namespace dgdef

#endif
