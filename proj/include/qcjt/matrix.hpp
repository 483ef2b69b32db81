#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qcjt/field.hpp"

namespace qcjt {

// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  const Field& f() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem* row(std::size_t r) { return data_.data() + r * cols_; }
  const Elem* row(std::size_t r) const { return data_.data() + r * cols_; }
  const std::vector<Elem>& data() const { return data_; }

  std::vector<Elem> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Elem>& v);
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& a, Elem s);
std::vector<Elem> mat_vec(const Matrix& a, const std::vector<Elem>& v);
Matrix transpose(const Matrix& a);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix select_columns(const Matrix& a, const std::vector<std::size_t>& cols);
Matrix select_rows(const Matrix& a, const std::vector<std::size_t>& rows);
Matrix matrix_power(const Matrix& a, unsigned k);

struct Echelon {
  Matrix m;                         // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Matrix a);
std::size_t rank(Matrix a);
// Columns form a basis of {v : a v = 0}; at free column j the basis vector
// for j has a 1 and every other free coordinate 0.
Matrix kernel_basis(const Matrix& a, std::vector<std::size_t>* free_cols = nullptr);
// Linearly independent columns of a spanning its column space (the pivot
// columns, in order).
Matrix image_basis(const Matrix& a);
std::vector<std::size_t> pivot_columns(const Matrix& a);
Elem determinant(Matrix a);
std::optional<Matrix> try_inverse(const Matrix& a);
Matrix inverse(const Matrix& a);
// Some X with a X = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Entry-wise image under a field embedding table.
Matrix map_entries(const Matrix& a, const FieldPtr& target, const std::vector<Elem>& table);

}  // namespace qcjt
