#include "qcjt/matrix.hpp"

#include <utility>

namespace qcjt {

namespace {

void same_field(const Matrix& a, const Matrix& b) {
  require(a.field() == b.field(), ErrorKind::FieldMismatch, "matrices over different fields");
}

// Gaussian elimination in place; returns pivot columns.  With full = true the
// result is in reduced row echelon form.
std::vector<std::size_t> eliminate(Matrix& m, bool full) {
  const Field& f = m.f();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = c; k < cols; ++k) std::swap(m(piv, k), m(r, k));
    Elem inv = f.inv(m(r, c));
    if (inv != 1) f.scale(m.row(r) + c, inv, cols - c);
    for (std::size_t i = full ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      Elem x = m(i, c);
      if (x != 0) f.axpy(m.row(i) + c, m.row(r) + c, f.neg(x), cols - c);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Elem> Matrix::column(std::size_t c) const {
  std::vector<Elem> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const std::vector<Elem>& v) {
  require(v.size() == rows_, ErrorKind::LengthMismatch, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const {
  for (Elem x : data_)
    if (x != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  same_field(a, b);
  require(a.cols() == b.rows(), ErrorKind::LengthMismatch, "matrix product shape mismatch");
  Matrix c(a.field(), a.rows(), b.cols());
  const Field& f = a.f();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Elem x = a(i, k);
      if (x != 0) f.axpy(c.row(i), b.row(k), x, b.cols());
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  same_field(a, b);
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::LengthMismatch,
          "matrix sum shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) a.f().axpy(c.row(i), b.row(i), 1, a.cols());
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  same_field(a, b);
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::LengthMismatch,
          "matrix difference shape mismatch");
  Matrix c = a;
  Elem m1 = a.f().neg(1);
  for (std::size_t i = 0; i < a.rows(); ++i) a.f().axpy(c.row(i), b.row(i), m1, a.cols());
  return c;
}

Matrix scaled(const Matrix& a, Elem s) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) a.f().scale(c.row(i), s, a.cols());
  return c;
}

std::vector<Elem> mat_vec(const Matrix& a, const std::vector<Elem>& v) {
  require(a.cols() == v.size(), ErrorKind::LengthMismatch, "vector length mismatch");
  const Field& f = a.f();
  std::vector<Elem> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem s = 0;
    const Elem* r = a.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (r[k] && v[k]) s = f.add(s, f.mul(r[k], v[k]));
    out[i] = s;
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  require(!blocks.empty(), ErrorKind::BadInput, "hstack of nothing");
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    require(b.rows() == blocks[0].rows(), ErrorKind::LengthMismatch, "hstack row mismatch");
    cols += b.cols();
  }
  Matrix m(blocks[0].field(), blocks[0].rows(), cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, off + j) = b(i, j);
    off += b.cols();
  }
  return m;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  require(!blocks.empty(), ErrorKind::BadInput, "vstack of nothing");
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    require(b.cols() == blocks[0].cols(), ErrorKind::LengthMismatch, "vstack column mismatch");
    rows += b.rows();
  }
  Matrix m(blocks[0].field(), rows, blocks[0].cols());
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, j) = b(i, j);
    off += b.rows();
  }
  return m;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  same_field(a, b);
  Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

Matrix select_columns(const Matrix& a, const std::vector<std::size_t>& cols) {
  Matrix m(a.field(), a.rows(), cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = a(i, cols[j]);
  return m;
}

Matrix select_rows(const Matrix& a, const std::vector<std::size_t>& rows) {
  Matrix m(a.field(), rows.size(), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(rows[i], j);
  return m;
}

Matrix matrix_power(const Matrix& a, unsigned k) {
  Matrix r = Matrix::identity(a.field(), a.rows());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

Echelon rref(Matrix a) {
  Echelon e;
  e.pivots = eliminate(a, true);
  e.m = std::move(a);
  return e;
}

std::size_t rank(Matrix a) {
  if (a.empty()) return 0;
  return eliminate(a, false).size();
}

Matrix kernel_basis(const Matrix& a, std::vector<std::size_t>* free_cols) {
  Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(a.field(), a.cols(), free.size());
  const Field& f = a.f();
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], j) = f.neg(e.m(r, free[j]));
  }
  if (free_cols) *free_cols = std::move(free);
  return k;
}

Matrix image_basis(const Matrix& a) {
  if (a.empty()) return Matrix(a.field(), a.rows(), 0);
  Matrix copy = a;
  return select_columns(a, eliminate(copy, false));
}

std::vector<std::size_t> pivot_columns(const Matrix& a) {
  if (a.empty()) return {};
  Matrix copy = a;
  return eliminate(copy, false);
}

Elem determinant(Matrix a) {
  require(a.rows() == a.cols(), ErrorKind::LengthMismatch, "determinant of non-square matrix");
  const Field& f = a.f();
  std::size_t n = a.rows();
  Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t k = c; k < n; ++k) std::swap(a(piv, k), a(c, k));
      det = f.neg(det);
    }
    Elem p = a(c, c);
    det = f.mul(det, p);
    Elem inv = f.inv(p);
    for (std::size_t i = c + 1; i < n; ++i) {
      Elem x = a(i, c);
      if (x != 0) f.axpy(a.row(i) + c, a.row(c) + c, f.neg(f.mul(x, inv)), n - c);
    }
  }
  return det;
}

std::optional<Matrix> try_inverse(const Matrix& a) {
  require(a.rows() == a.cols(), ErrorKind::LengthMismatch, "inverse of non-square matrix");
  std::size_t n = a.rows();
  Echelon e = rref(hstack({a, Matrix::identity(a.field(), n)}));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
  return inv;
}

Matrix inverse(const Matrix& a) {
  auto inv = try_inverse(a);
  require(inv.has_value(), ErrorKind::DivisionByZero, "singular matrix");
  return *inv;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorKind::LengthMismatch, "solve shape mismatch");
  std::size_t n = a.cols();
  Echelon e = rref(hstack({a, b}));
  Matrix x(a.field(), n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.m(r, n + j);
  }
  return x;
}

Matrix map_entries(const Matrix& a, const FieldPtr& target, const std::vector<Elem>& table) {
  Matrix m(target, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = table[a(i, j)];
  return m;
}

}  // namespace qcjt
