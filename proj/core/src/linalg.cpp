#include "exstructa/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "exstructa/error.hpp"

namespace exstructa {

namespace {

inline int mulp(int p, int a, int b) { return (a * b) % p; }

void check_same_field(const Matrix& a, const Matrix& b) {
  if (a.p() != b.p()) fail(ErrorCode::InvalidConfig, "matrices over different fields");
}

}  // namespace

bool supported_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

int field_inverse(int p, int a) {
  a %= p;
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  fail(ErrorCode::InvalidConfig, "zero has no inverse");
}

Matrix::Matrix(int p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

Matrix Matrix::identity(int p, int n) {
  Matrix m(p, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(int p, const std::vector<std::vector<int>>& rows) {
  int nc = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  Matrix m(p, static_cast<int>(rows.size()), nc);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != nc)
      fail(ErrorCode::InvalidConfig, "ragged matrix rows");
    for (int c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::column(int p, const std::vector<std::uint8_t>& v) {
  Matrix m(p, static_cast<int>(v.size()), 1);
  for (int i = 0; i < m.rows(); ++i) m(i, 0) = v[i] % p;
  return m;
}

void Matrix::set(int r, int c, long long value) {
  long long v = value % p_;
  if (v < 0) v += p_;
  (*this)(r, c) = static_cast<std::uint8_t>(v);
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  check_same_field(*this, rhs);
  if (cols_ != rhs.rows_) fail(ErrorCode::InvalidConfig, "matrix product shape mismatch");
  Matrix out(p_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    const std::uint8_t* a = row_ptr(i);
    std::uint8_t* o = out.row_ptr(i);
    for (int k = 0; k < cols_; ++k) {
      int s = a[k];
      if (!s) continue;
      const std::uint8_t* b = rhs.row_ptr(k);
      for (int j = 0; j < rhs.cols_; ++j) o[j] = static_cast<std::uint8_t>((o[j] + s * b[j]) % p_);
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  check_same_field(*this, rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorCode::InvalidConfig, "matrix sum shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = static_cast<std::uint8_t>((data_[i] + rhs.data_[i]) % p_);
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& x : out.data_) x = static_cast<std::uint8_t>((p_ - x) % p_);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::scaled(int s) const {
  Matrix out(*this);
  s %= p_;
  if (s < 0) s += p_;
  for (auto& x : out.data_) x = static_cast<std::uint8_t>(mulp(p_, x, s));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint8_t x) { return x == 0; });
}

bool Matrix::operator==(const Matrix& rhs) const {
  return p_ == rhs.p_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool Matrix::operator<(const Matrix& rhs) const {
  return std::tie(rows_, cols_, data_) < std::tie(rhs.rows_, rhs.cols_, rhs.data_);
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  Matrix out(p_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void Matrix::paste(int r0, int c0, const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

std::vector<std::uint8_t> Matrix::col_vector(int c) const {
  std::vector<std::uint8_t> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

std::vector<int> row_reduce(Matrix& m) {
  const int p = m.p();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    int inv = field_inverse(p, m(r, c));
    if (inv != 1)
      for (int j = c; j < m.cols(); ++j) m(r, j) = static_cast<std::uint8_t>(mulp(p, m(r, j), inv));
    const std::uint8_t* pr = m.row_ptr(r);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || !m(i, c)) continue;
      int f = p - m(i, c);
      std::uint8_t* ri = m.row_ptr(i);
      for (int j = c; j < m.cols(); ++j) ri[j] = static_cast<std::uint8_t>((ri[j] + f * pr[j]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(row_reduce(m).size()); }

Matrix kernel_basis(const Matrix& m) {
  const int p = m.p();
  Matrix r = m;
  auto pivots = row_reduce(r);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;
  int nfree = m.cols() - static_cast<int>(pivots.size());
  Matrix k(p, m.cols(), nfree);
  int col = 0;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    k(f, col) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      k(pivots[i], col) = static_cast<std::uint8_t>((p - r(static_cast<int>(i), f)) % p);
    ++col;
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail(ErrorCode::InvalidConfig, "solve shape mismatch");
  Matrix aug = hstack(a, b);
  auto pivots = row_reduce(aug);
  Matrix x(a.p(), a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= a.cols()) return std::nullopt;
    for (int j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(static_cast<int>(i), a.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  Matrix aug = hstack(a, Matrix::identity(a.p(), a.rows()));
  auto pivots = row_reduce(aug);
  if (static_cast<int>(pivots.size()) < a.rows() || (a.rows() > 0 && pivots[a.rows() - 1] >= a.cols()))
    return std::nullopt;
  return aug.block(0, a.cols(), a.rows(), a.rows());
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail(ErrorCode::InvalidConfig, "hstack shape mismatch");
  Matrix out(a.p(), a.rows(), a.cols() + b.cols());
  out.paste(0, 0, a);
  out.paste(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) fail(ErrorCode::InvalidConfig, "vstack shape mismatch");
  Matrix out(a.p(), a.rows() + b.rows(), a.cols());
  out.paste(0, 0, a);
  out.paste(a.rows(), 0, b);
  return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.p(), a.rows() + b.rows(), a.cols() + b.cols());
  out.paste(0, 0, a);
  out.paste(a.rows(), a.cols(), b);
  return out;
}

Matrix canonical_rows(Matrix rows) {
  auto pivots = row_reduce(rows);
  return rows.block(0, 0, static_cast<int>(pivots.size()), rows.cols());
}

Matrix span_columns(const Matrix& cols) { return canonical_rows(cols.transpose()); }

bool rows_contain(const Matrix& basis, const std::uint8_t* v) {
  // basis is RREF, so reduce v against each pivot and see what is left
  const int p = basis.p();
  std::vector<std::uint8_t> w(v, v + basis.cols());
  int c = 0;
  for (int i = 0; i < basis.rows(); ++i) {
    const std::uint8_t* r = basis.row_ptr(i);
    while (!r[c]) ++c;
    if (int f = w[c]) {
      for (int j = c; j < basis.cols(); ++j) w[j] = static_cast<std::uint8_t>((w[j] + (p - f) * r[j]) % p);
    }
  }
  return std::all_of(w.begin(), w.end(), [](std::uint8_t x) { return x == 0; });
}

bool rows_contain_all(const Matrix& basis, const Matrix& other) {
  for (int i = 0; i < other.rows(); ++i)
    if (!rows_contain(basis, other.row_ptr(i))) return false;
  return true;
}

Matrix sum_rows(const Matrix& a, const Matrix& b) { return canonical_rows(vstack(a, b)); }

Matrix intersect_rows(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0 || b.rows() == 0) return Matrix(a.p(), 0, a.cols());
  // pairs (s, t) with s*A = t*B; the intersection is spanned by the s*A
  Matrix sys = hstack(a.transpose(), (-b).transpose());
  Matrix k = kernel_basis(sys);
  Matrix s = k.block(0, 0, a.rows(), k.cols());
  return canonical_rows((a.transpose() * s).transpose());
}

ColumnBasis::ColumnBasis(Matrix columns) : k(std::move(columns)) {
  Matrix t = k.transpose();
  auto piv = row_reduce(t);
  const int r = k.cols();
  if (static_cast<int>(piv.size()) != r) fail(ErrorCode::InvalidConfig, "column basis is not independent");
  Matrix sub(k.p(), r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) sub(i, j) = k(piv[i], j);
  auto inv = inverse(sub);
  l = Matrix(k.p(), r, k.rows());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) l(i, piv[j]) = (*inv)(i, j);
}

namespace {

void grow_subspaces(int p, int k, int dim, std::vector<int>& pivots, int next, std::vector<Matrix>& out) {
  if (static_cast<int>(pivots.size()) == dim) {
    // fill free entries: positions right of each pivot that are not pivot columns
    std::vector<std::pair<int, int>> free;
    std::vector<char> is_piv(k, 0);
    for (int c : pivots) is_piv[c] = 1;
    for (int i = 0; i < dim; ++i)
      for (int c = pivots[i] + 1; c < k; ++c)
        if (!is_piv[c]) free.emplace_back(i, c);
    std::vector<int> digits(free.size(), 0);
    while (true) {
      Matrix m(p, dim, k);
      for (int i = 0; i < dim; ++i) m(i, pivots[i]) = 1;
      for (std::size_t f = 0; f < free.size(); ++f) m(free[f].first, free[f].second) = static_cast<std::uint8_t>(digits[f]);
      out.push_back(std::move(m));
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
    return;
  }
  for (int c = next; c < k; ++c) {
    pivots.push_back(c);
    grow_subspaces(p, k, dim, pivots, c + 1, out);
    pivots.pop_back();
  }
}

}  // namespace

const std::vector<Matrix>& all_subspaces(int p, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Matrix>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, k});
  if (it != cache.end()) return it->second;
  std::vector<Matrix> out;
  for (int d = 0; d <= k; ++d) {
    std::vector<int> piv;
    std::vector<Matrix> level;
    grow_subspaces(p, k, d, piv, 0, level);
    std::sort(level.begin(), level.end());
    for (auto& m : level) out.push_back(std::move(m));
  }
  return cache.emplace(std::make_pair(p, k), std::move(out)).first->second;
}

}  // namespace exstructa
