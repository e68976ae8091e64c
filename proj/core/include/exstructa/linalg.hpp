#pragma once

// Dense matrices over a small prime field GF(p).
//
// Entries are stored one byte each; p is a runtime value so the same code
// serves GF(2) and GF(3). Everything here is sized for desk-scale modules
// (a few dozen rows), so no attempt is made at blocking or packing.

#include <cstdint>
#include <optional>
#include <vector>

namespace exstructa {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int p, int rows, int cols);

  static Matrix identity(int p, int n);
  static Matrix from_rows(int p, const std::vector<std::vector<int>>& rows);
  static Matrix column(int p, const std::vector<std::uint8_t>& v);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint8_t operator()(int r, int c) const { return data_[r * cols_ + c]; }
  std::uint8_t& operator()(int r, int c) { return data_[r * cols_ + c]; }
  void set(int r, int c, long long value);

  const std::uint8_t* row_ptr(int r) const { return data_.data() + r * cols_; }
  std::uint8_t* row_ptr(int r) { return data_.data() + r * cols_; }
  const std::vector<std::uint8_t>& data() const { return data_; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(int s) const;
  Matrix transpose() const;

  bool is_zero() const;
  bool operator==(const Matrix& rhs) const;
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }
  bool operator<(const Matrix& rhs) const;

  Matrix block(int r0, int c0, int nr, int nc) const;
  void paste(int r0, int c0, const Matrix& m);
  std::vector<std::uint8_t> col_vector(int c) const;

 private:
  int p_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> data_;
};

// field helpers
int field_inverse(int p, int a);
bool supported_prime(int p);

// Reduce in place to reduced row echelon form; returns pivot columns.
std::vector<int> row_reduce(Matrix& m);
int rank(Matrix m);

// Columns of the result span the right null space of m.
Matrix kernel_basis(const Matrix& m);

// Some x with a*x = b (b may have several columns), or nothing.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);

// Subspaces of F^d are kept as RREF row bases without zero rows, which is a
// canonical form: two subspaces agree iff their bases are byte-identical.
Matrix canonical_rows(Matrix rows);
Matrix span_columns(const Matrix& cols);
bool rows_contain(const Matrix& basis, const std::uint8_t* v);
bool rows_contain_all(const Matrix& basis, const Matrix& other);
Matrix sum_rows(const Matrix& a, const Matrix& b);
Matrix intersect_rows(const Matrix& a, const Matrix& b);

// A column basis k (m x r) together with a left inverse l (r x m), l*k = 1.
// coordinates(v) is only meaningful for v in the column span.
struct ColumnBasis {
  Matrix k;
  Matrix l;
  explicit ColumnBasis(Matrix columns);
  Matrix coordinates(const Matrix& v) const { return l * v; }
  int dim() const { return k.cols(); }
};

// Every subspace of F_p^k, in canonical form, deterministic order (by
// dimension, then bytes). Cached per (p, k).
const std::vector<Matrix>& all_subspaces(int p, int k);

}  // namespace exstructa
