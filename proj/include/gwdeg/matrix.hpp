// Dense matrices over one field, with exact Gaussian elimination. Row and
// pivot choices are deterministic (first nonzero entry), so every derived
// object (rank profile, column-space basis, solutions) is reproducible.
#ifndef GWDEG_MATRIX_HPP
#define GWDEG_MATRIX_HPP

#include <optional>
#include <vector>

#include "gwdeg/field.hpp"

namespace gwdeg {

class Matrix {
 public:
  Matrix(const FieldDescriptor& f, size_t rows, size_t cols);
  static Matrix identity(const FieldDescriptor& f, size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldDescriptor& field() const { return field_; }

  FieldElement& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const FieldElement& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  Matrix scaled(const FieldElement& c) const;

  bool operator==(const Matrix& o) const;
  bool is_zero() const;
  bool is_symmetric() const;

  FieldElement trace() const;
  FieldElement det() const;  // square only
  size_t rank() const;

  // Solves A x = b; empty when inconsistent.
  std::optional<std::vector<FieldElement>> solve(const std::vector<FieldElement>& b) const;
  // Solves A X = B column by column; empty when any column is inconsistent.
  std::optional<Matrix> solve_matrix(const Matrix& B) const;
  std::optional<Matrix> inverse() const;  // square only

  // Indices of the pivot columns of the echelon form, ascending.
  std::vector<size_t> pivot_columns() const;
  // The original columns at those indices, as coordinate vectors.
  std::vector<std::vector<FieldElement>> column_space_basis() const;

  std::vector<FieldElement> column(size_t j) const;
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

  std::string to_string() const;

 private:
  FieldDescriptor field_;
  size_t rows_, cols_;
  std::vector<FieldElement> a_;
};

}  // namespace gwdeg

#endif
