#include "srkit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

namespace srkit {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::initializer_list<double> entries)
    : rows_(rows), cols_(cols), data_(entries) {
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("Matrix: initializer size does not match dimensions");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::size_t Matrix::half_order() const {
  if (!is_square() || rows_ % 2 != 0) {
    throw std::invalid_argument("Matrix: expected a square matrix of even order");
  }
  return rows_ / 2;
}

std::vector<double> Matrix::column(std::size_t j) const {
  std::vector<double> col(rows_);
  for (std::size_t i = 0; i < rows_; ++i) col[i] = (*this)(i, j);
  return col;
}

void Matrix::set_column(std::size_t j, std::span<const double> values) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(double scale) {
  for (double& v : data_) v *= scale;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("operator*: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

std::vector<double> operator*(const Matrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("operator*: vector length mismatch");
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

bool all_finite(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j))) return false;
  return true;
}

double max_abs(const Matrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, std::abs(m(i, j)));
  return best;
}

double frobenius_norm(const Matrix& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * m(i, j);
  return std::sqrt(acc);
}

double norm2(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return std::sqrt(acc);
}

namespace {

// One cyclic Jacobi sweep over the symmetric matrix s; returns the largest
// off-diagonal magnitude seen before rotating it away.
double jacobi_sweep(Matrix& s) {
  const std::size_t n = s.rows();
  double off = 0.0;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const double apq = s(p, q);
      off = std::max(off, std::abs(apq));
      if (apq == 0.0) continue;
      const double theta = (s(q, q) - s(p, p)) / (2.0 * apq);
      const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double sn = t * c;
      for (std::size_t k = 0; k < n; ++k) {
        const double skp = s(k, p);
        const double skq = s(k, q);
        s(k, p) = c * skp - sn * skq;
        s(k, q) = sn * skp + c * skq;
      }
      for (std::size_t k = 0; k < n; ++k) {
        const double spk = s(p, k);
        const double sqk = s(q, k);
        s(p, k) = c * spk - sn * sqk;
        s(q, k) = sn * spk + c * sqk;
      }
    }
  }
  return off;
}

}  // namespace

double spectral_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  // Gram matrix of the smaller side.
  const bool wide = m.cols() > m.rows();
  const Matrix mt = m.transpose();
  Matrix gram = wide ? m * mt : mt * m;
  const double scale = max_abs(gram);
  if (scale == 0.0) return 0.0;
  for (int sweep = 0; sweep < 60; ++sweep) {
    if (jacobi_sweep(gram) <= 1e-18 * scale) break;
  }
  double lambda_max = 0.0;
  for (std::size_t i = 0; i < gram.rows(); ++i) lambda_max = std::max(lambda_max, gram(i, i));
  return std::sqrt(std::max(lambda_max, 0.0));
}

namespace {

struct LuResult {
  Matrix lu;
  std::vector<std::size_t> pivots;
  int sign = 1;
  bool singular = false;
};

LuResult lu_factor(Matrix a) {
  const std::size_t n = a.rows();
  LuResult out{std::move(a), {}, 1, false};
  out.pivots.resize(n);
  Matrix& m = out.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(m(i, k)) > best) {
        best = std::abs(m(i, k));
        piv = i;
      }
    }
    out.pivots[k] = piv;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      out.sign = -out.sign;
    }
    if (m(k, k) == 0.0) {
      out.singular = true;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      m(i, k) /= m(k, k);
      const double lik = m(i, k);
      if (lik == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= lik * m(k, j);
    }
  }
  return out;
}

}  // namespace

double determinant(Matrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix must be square");
  if (m.rows() == 0) return 1.0;
  const LuResult f = lu_factor(std::move(m));
  if (f.singular) return 0.0;
  double det = f.sign;
  for (std::size_t i = 0; i < f.lu.rows(); ++i) det *= f.lu(i, i);
  return det;
}

Matrix solve(Matrix a, Matrix b) {
  if (!a.is_square() || a.rows() != b.rows()) {
    throw std::invalid_argument("solve: dimension mismatch");
  }
  const std::size_t n = a.rows();
  const LuResult f = lu_factor(std::move(a));
  if (f.singular) throw SingularMatrixError("solve: matrix is numerically singular");
  Matrix x = std::move(b);
  for (std::size_t k = 0; k < n; ++k) {
    if (f.pivots[k] != k) {
      for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(k, j), x(f.pivots[k], j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double lik = f.lu(i, k);
      if (lik == 0.0) continue;
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= lik * x(k, j);
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    const double d = f.lu(k, k);
    for (std::size_t j = 0; j < x.cols(); ++j) {
      double acc = x(k, j);
      for (std::size_t i = k + 1; i < n; ++i) acc -= f.lu(k, i) * x(i, j);
      x(k, j) = acc / d;
    }
  }
  return x;
}

void require_even_square(const Matrix& m, const char* context) {
  if (!m.is_square() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw std::invalid_argument(std::string(context) + ": expected a nonempty 2n x 2n matrix");
  }
  if (!all_finite(m)) {
    throw std::invalid_argument(std::string(context) + ": matrix has non-finite entries");
  }
}

}  // namespace srkit
