#ifndef FAMALG_LINALG_HPP
#define FAMALG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "famalg/rational.hpp"

namespace famalg {

using Vec = std::vector<Rational>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);
bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

/// Dense matrix of exact rationals, row-major.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool is_zero() const;
  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  Matrix transpose() const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_col(std::size_t j, const Vec& v);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  Matrix operator-() const;

  Matrix pow(unsigned long k) const;  // square matrices only
  std::optional<Matrix> inverse() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

/// 3-index tensor of exact rationals; entry(i,j,k) with k fastest.
/// Houses structure constants of bilinear operations: op(e_i, e_j) = sum_k t(i,j,k) e_k.
class Tensor3 {
public:
  Tensor3() : d1_(0), d2_(0), d3_(0) {}
  Tensor3(std::size_t d1, std::size_t d2, std::size_t d3)
      : d1_(d1), d2_(d2), d3_(d3), e_(d1 * d2 * d3) {}

  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }
  std::size_t dim3() const { return d3_; }

  Rational& at(std::size_t i, std::size_t j, std::size_t k) {
    return e_[(i * d2_ + j) * d3_ + k];
  }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return e_[(i * d2_ + j) * d3_ + k];
  }

  bool is_zero() const;
  // Bilinear evaluation: op(x, y) for coordinate vectors x (length d1), y (length d2).
  Vec eval(const Vec& x, const Vec& y) const;

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  Tensor3& operator*=(const Rational& c);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const Rational& c, Tensor3 a) { return a *= c; }
  Tensor3 operator-() const;
  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.d3_ == b.d3_ && a.e_ == b.e_;
  }

private:
  std::size_t d1_, d2_, d3_;
  std::vector<Rational> e_;
};

/// Exact rank via fraction-free (Bareiss) elimination on the cleared-denominator
/// integer matrix; intermediate entries stay bounded by minors.
std::size_t rank(const Matrix& m);

/// Basis of the null space {v : m v = 0}; size is cols - rank. Computed from the
/// reduced row echelon form, one vector per free column.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Matrix whose j-th column is basis_images[j]. Throws on ragged input.
Matrix assemble_linear_map(const std::vector<Vec>& basis_images);

}  // namespace famalg

#endif
