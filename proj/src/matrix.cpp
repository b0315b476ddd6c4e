#include "gwdeg/matrix.hpp"

#include <sstream>

namespace gwdeg {

namespace {

void check_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field())
    fail(Errc::descriptor_mismatch, "matrices over different fields");
}

// Row echelon reduction in place; returns pivot (row, col) pairs. When
// `reduced` is set, pivots are scaled to 1 and cleared above as well.
std::vector<std::pair<size_t, size_t>> echelonize(
    std::vector<std::vector<FieldElement>>& m, size_t cols, bool reduced,
    int* det_sign = nullptr) {
  std::vector<std::pair<size_t, size_t>> pivots;
  if (det_sign) *det_sign = 1;
  size_t row = 0;
  const size_t rows = m.size();
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && m[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != row) {
      std::swap(m[sel], m[row]);
      if (det_sign) *det_sign = -*det_sign;
    }
    if (reduced) {
      FieldElement inv = m[row][col].inverse();
      for (size_t j = col; j < m[row].size(); ++j) m[row][j] = m[row][j] * inv;
    }
    for (size_t i = reduced ? 0 : row + 1; i < rows; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      FieldElement factor = m[i][col] / m[row][col];
      for (size_t j = col; j < m[i].size(); ++j)
        m[i][j] = m[i][j] - factor * m[row][j];
    }
    pivots.emplace_back(row, col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(const FieldDescriptor& f, size_t rows, size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, FieldElement::zero(f)) {}

Matrix Matrix::identity(const FieldDescriptor& f, size_t n) {
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(f);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_field(*this, o);
  if (cols_ != o.rows_) fail(Errc::invalid_input, "matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const FieldElement& x = at(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j) + x * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(Errc::invalid_input, "matrix sum shape mismatch");
  Matrix r(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(Errc::invalid_input, "matrix difference shape mismatch");
  Matrix r(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::scaled(const FieldElement& c) const {
  Matrix r(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = i + 1; j < cols_; ++j)
      if (!(at(i, j) == at(j, i))) return false;
  return true;
}

FieldElement Matrix::trace() const {
  hard_check(rows_ == cols_, "trace of a nonsquare matrix");
  FieldElement t = FieldElement::zero(field_);
  for (size_t i = 0; i < rows_; ++i) t = t + at(i, i);
  return t;
}

FieldElement Matrix::det() const {
  hard_check(rows_ == cols_, "determinant of a nonsquare matrix");
  std::vector<std::vector<FieldElement>> m(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    m[i].reserve(cols_);
    for (size_t j = 0; j < cols_; ++j) m[i].push_back(at(i, j));
  }
  int sign = 1;
  auto pivots = echelonize(m, cols_, false, &sign);
  if (pivots.size() < rows_) return FieldElement::zero(field_);
  FieldElement d = sign == 1 ? FieldElement::one(field_) : -FieldElement::one(field_);
  for (auto [r, c] : pivots) d = d * m[r][c];
  return d;
}

size_t Matrix::rank() const {
  std::vector<std::vector<FieldElement>> m(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    m[i].reserve(cols_);
    for (size_t j = 0; j < cols_; ++j) m[i].push_back(at(i, j));
  }
  return echelonize(m, cols_, false).size();
}

std::optional<Matrix> Matrix::solve_matrix(const Matrix& B) const {
  check_field(*this, B);
  if (B.rows_ != rows_) fail(Errc::invalid_input, "solve shape mismatch");
  std::vector<std::vector<FieldElement>> m(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    m[i].reserve(cols_ + B.cols_);
    for (size_t j = 0; j < cols_; ++j) m[i].push_back(at(i, j));
    for (size_t j = 0; j < B.cols_; ++j) m[i].push_back(B.at(i, j));
  }
  auto pivots = echelonize(m, cols_, true);
  // Inconsistent when a zero row of A meets a nonzero right-hand side.
  for (size_t i = pivots.size(); i < rows_; ++i)
    for (size_t j = cols_; j < cols_ + B.cols_; ++j)
      if (!m[i][j].is_zero()) return std::nullopt;
  Matrix X(field_, cols_, B.cols_);
  for (auto [r, c] : pivots)
    for (size_t j = 0; j < B.cols_; ++j) X.at(c, j) = m[r][cols_ + j];
  return X;
}

std::optional<std::vector<FieldElement>> Matrix::solve(
    const std::vector<FieldElement>& b) const {
  if (b.size() != rows_) fail(Errc::invalid_input, "solve shape mismatch");
  Matrix B(field_, rows_, 1);
  for (size_t i = 0; i < rows_; ++i) B.at(i, 0) = b[i];
  auto X = solve_matrix(B);
  if (!X) return std::nullopt;
  return X->column(0);
}

std::optional<Matrix> Matrix::inverse() const {
  hard_check(rows_ == cols_, "inverse of a nonsquare matrix");
  auto X = solve_matrix(identity(field_, rows_));
  if (!X) return std::nullopt;
  // solve_matrix succeeds with free variables set to zero; verify exactly.
  if (!((*this) * (*X) == identity(field_, rows_))) return std::nullopt;
  return X;
}

std::vector<size_t> Matrix::pivot_columns() const {
  std::vector<std::vector<FieldElement>> m(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    m[i].reserve(cols_);
    for (size_t j = 0; j < cols_; ++j) m[i].push_back(at(i, j));
  }
  auto pivots = echelonize(m, cols_, false);
  std::vector<size_t> cols;
  cols.reserve(pivots.size());
  for (auto [r, c] : pivots) cols.push_back(c);
  return cols;
}

std::vector<std::vector<FieldElement>> Matrix::column_space_basis() const {
  std::vector<std::vector<FieldElement>> basis;
  for (size_t j : pivot_columns()) basis.push_back(column(j));
  return basis;
}

std::vector<FieldElement> Matrix::column(size_t j) const {
  std::vector<FieldElement> c;
  c.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return c;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const {
  if (v.size() != cols_) fail(Errc::invalid_input, "matrix apply shape mismatch");
  std::vector<FieldElement> r(rows_, FieldElement::zero(field_));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) r[i] = r[i] + at(i, j) * v[j];
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).to_string();
    }
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

}  // namespace gwdeg
