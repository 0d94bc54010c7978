#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace srkit {

/// Raised when a linear solve meets a numerically singular matrix.
class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense real matrix, row-major. The library works at desk scale, so all
/// algorithms are unblocked O(n^3) loops over this type.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  Matrix(std::size_t rows, std::size_t cols, std::initializer_list<double> entries);

  static Matrix identity(std::size_t n);

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  bool is_square() const { return rows_ == cols_; }

  /// n for a 2n x 2n matrix; throws unless the matrix is square with even order.
  std::size_t half_order() const;

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<double> column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const double> values);

  Matrix transpose() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double scale);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& a, std::span<const double> x);

bool all_finite(const Matrix& m);

/// Largest entry magnitude. Cheap norm used for pattern checks.
double max_abs(const Matrix& m);
double frobenius_norm(const Matrix& m);

/// Spectral norm via cyclic Jacobi on the Gram matrix. Deterministic and
/// accurate at the sizes this library targets.
double spectral_norm(const Matrix& m);

double norm2(std::span<const double> x);

/// Determinant by partially pivoted elimination.
double determinant(Matrix m);

/// Solves A X = B with partial pivoting; throws SingularMatrixError.
Matrix solve(Matrix a, Matrix b);

/// Throws std::invalid_argument unless m is square, of even order, and finite.
void require_even_square(const Matrix& m, const char* context);

}  // namespace srkit
