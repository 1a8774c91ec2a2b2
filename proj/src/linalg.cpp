#include "famalg/linalg.hpp"

#include <stdexcept>

namespace famalg {

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec +: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec -: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = Rational(1);
  return v;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix::from_rows: ragged input");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: length mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Vec Matrix::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec Matrix::col(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("Matrix::set_col: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (!same_shape(o)) throw std::invalid_argument("Matrix +: shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (!same_shape(o)) throw std::invalid_argument("Matrix -: shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (auto& x : e_) x *= c;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m(*this);
  for (auto& x : m.e_) x = -x;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix *: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Matrix Matrix::pow(unsigned long k) const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix::pow: square matrices only");
  Matrix acc = Matrix::identity(rows_);
  Matrix base = *this;
  while (k > 0) {
    if (k & 1UL) acc = acc * base;
    k >>= 1UL;
    if (k > 0) base = base * base;
  }
  return acc;
}

namespace {

// Gauss-Jordan to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = Rational(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix::inverse: square matrices only");
  Matrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Rational(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() != rows_) return std::nullopt;
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] != k) return std::nullopt;
  Matrix inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

bool Tensor3::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Tensor3::eval(const Vec& x, const Vec& y) const {
  if (x.size() != d1_ || y.size() != d2_) throw std::invalid_argument("Tensor3::eval: length mismatch");
  Vec r(d3_);
  for (std::size_t i = 0; i < d1_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d2_; ++j) {
      if (y[j].is_zero()) continue;
      Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < d3_; ++k)
        if (!at(i, j, k).is_zero()) r[k] += xy * at(i, j, k);
    }
  }
  return r;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (d1_ != o.d1_ || d2_ != o.d2_ || d3_ != o.d3_)
    throw std::invalid_argument("Tensor3 +: shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (d1_ != o.d1_ || d2_ != o.d2_ || d3_ != o.d3_)
    throw std::invalid_argument("Tensor3 -: shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Tensor3& Tensor3::operator*=(const Rational& c) {
  for (auto& x : e_) x *= c;
  return *this;
}

Tensor3 Tensor3::operator-() const {
  Tensor3 t(*this);
  for (auto& x : t.e_) x = -x;
  return t;
}

std::size_t rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row; row scaling does not change the rank.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) l = lcm(l, m.at(i, j).denominator());
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class s = m.at(i, j).raw() * mpq_class(l);
      s.canonicalize();
      a[i][j] = s.get_num();
    }
  }

  // Bareiss: after step k, entries are minors of the original; every division
  // by the previous pivot is exact.
  std::size_t rk = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t p = rk;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != rk) std::swap(a[p], a[rk]);
    for (std::size_t i = rk + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[rk][c] * a[i][j] - a[i][c] * a[rk][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  const std::size_t cols = m.cols();
  Matrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols);
    v[free] = Rational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix assemble_linear_map(const std::vector<Vec>& basis_images) {
  if (basis_images.empty()) return Matrix(0, 0);
  const std::size_t rows = basis_images[0].size();
  Matrix m(rows, basis_images.size());
  for (std::size_t j = 0; j < basis_images.size(); ++j) {
    if (basis_images[j].size() != rows)
      throw std::invalid_argument("assemble_linear_map: ragged input");
    m.set_col(j, basis_images[j]);
  }
  return m;
}

}  // namespace famalg
