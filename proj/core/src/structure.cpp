#include "srkit/structure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace srkit {

namespace {

std::size_t even_half(std::size_t len, const char* context) {
  if (len == 0 || len % 2 != 0) {
    throw std::invalid_argument(std::string(context) + ": vector length must be even and nonzero");
  }
  return len / 2;
}

}  // namespace

std::vector<double> apply_j(std::span<const double> x) {
  const std::size_t n = even_half(x.size(), "apply_j");
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = x[n + i];
    y[n + i] = -x[i];
  }
  return y;
}

Matrix apply_j(const Matrix& m) {
  const std::size_t n = even_half(m.rows(), "apply_j");
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = m(n + i, j);
      out(n + i, j) = -m(i, j);
    }
  }
  return out;
}

Matrix j_matrix(std::size_t half_order) {
  Matrix j(2 * half_order, 2 * half_order);
  for (std::size_t i = 0; i < half_order; ++i) {
    j(i, half_order + i) = 1.0;
    j(half_order + i, i) = -1.0;
  }
  return j;
}

double skew_inner(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("skew_inner: length mismatch");
  const std::size_t n = even_half(x.size(), "skew_inner");
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[n + i] - x[n + i] * y[i];
  return acc;
}

std::vector<double> symplectic_adjoint(std::span<const double> x) {
  // x^T J: component i is -x[n+i], component n+i is x[i].
  const std::size_t n = even_half(x.size(), "symplectic_adjoint");
  std::vector<double> row(x.size());
  for (std::size_t i = 0; i < n; ++i) {
    row[i] = -x[n + i];
    row[n + i] = x[i];
  }
  return row;
}

Matrix symplectic_adjoint(const Matrix& m) {
  even_half(m.rows(), "symplectic_adjoint");
  const std::size_t k = even_half(m.cols(), "symplectic_adjoint");
  // With B = (J_{2n} M)^T, the adjoint J_{2k}^T M^T J_{2n} has row i equal to
  // row k+i of B and row k+i equal to -row i of B.
  const Matrix jm_t = apply_j(m).transpose();
  Matrix out(2 * k, m.rows());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      out(i, j) = jm_t(k + i, j);
      out(k + i, j) = -jm_t(i, j);
    }
  }
  return out;
}

PermutationP::PermutationP(std::size_t half_order) : half_order_(half_order) {
  if (half_order == 0) throw std::invalid_argument("PermutationP: half order must be positive");
  order_.resize(2 * half_order);
  for (std::size_t t = 0; t < half_order; ++t) {
    order_[2 * t] = t;
    order_[2 * t + 1] = half_order + t;
  }
}

Matrix PermutationP::to_matrix() const {
  Matrix p(order_.size(), order_.size());
  for (std::size_t c = 0; c < order_.size(); ++c) p(order_[c], c) = 1.0;
  return p;
}

Matrix PermutationP::conjugate(const Matrix& a) const {
  if (a.rows() != order_.size() || a.cols() != order_.size()) {
    throw std::invalid_argument("PermutationP::conjugate: dimension mismatch");
  }
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(order_[r], order_[c]);
  return out;
}

double j_triangular_defect(const Matrix& m) {
  const std::size_t n = m.half_order();
  double defect = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j) {
        defect = std::max(defect, std::abs(m(i, j)));          // block 11
        defect = std::max(defect, std::abs(m(i, n + j)));      // block 12
        defect = std::max(defect, std::abs(m(n + i, n + j)));  // block 22
      }
      if (i >= j) {
        defect = std::max(defect, std::abs(m(n + i, j)));  // block 21, strictly upper
      }
    }
  }
  return defect;
}

double j_hessenberg_defect(const Matrix& m) {
  const std::size_t n = m.half_order();
  double defect = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j) {
        defect = std::max(defect, std::abs(m(i, j)));
        defect = std::max(defect, std::abs(m(n + i, j)));
        defect = std::max(defect, std::abs(m(n + i, n + j)));
      }
      if (i > j + 1) {
        defect = std::max(defect, std::abs(m(i, n + j)));  // block 12 is Hessenberg
      }
    }
  }
  return defect;
}

double symplecticity_defect(const Matrix& m) {
  Matrix res = symplectic_adjoint(m) * m;
  for (std::size_t i = 0; i < res.rows(); ++i) res(i, i) -= 1.0;
  return max_abs(res);
}

double symplecticity_defect_2norm(const Matrix& m) {
  Matrix res = symplectic_adjoint(m) * m;
  for (std::size_t i = 0; i < res.rows(); ++i) res(i, i) -= 1.0;
  return spectral_norm(res);
}

StructureReport check_structure(const Matrix& m, double tolerance) {
  require_even_square(m, "check_structure");
  if (tolerance < 0.0) throw std::invalid_argument("check_structure: tolerance must be nonnegative");
  const std::size_t n = m.half_order();

  StructureReport report;
  report.tolerance = tolerance;
  report.symplectic.defect = symplecticity_defect(m);
  report.symplectic.holds = report.symplectic.defect <= tolerance;
  report.j_triangular.defect = j_triangular_defect(m);
  report.j_triangular.holds = report.j_triangular.defect <= tolerance;
  report.upper_j_hessenberg.defect = j_hessenberg_defect(m);
  report.upper_j_hessenberg.holds = report.upper_j_hessenberg.defect <= tolerance;

  // Unreduced: the lower-left block is nonsingular (it is triangular, so the
  // diagonal product decides) and the Hessenberg subdiagonal has no zeros.
  if (report.upper_j_hessenberg.holds) {
    double diag_product = 1.0;
    for (std::size_t i = 0; i < n; ++i) diag_product *= std::abs(m(n + i, i));
    bool subdiag_ok = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(m(i + 1, n + i)) <= tolerance) subdiag_ok = false;
    }
    report.unreduced = diag_product > tolerance && subdiag_ok;
  }
  return report;
}

double even_leading_minor(const Matrix& a, std::size_t pairs) {
  require_even_square(a, "even_leading_minor");
  const std::size_t n = a.half_order();
  if (pairs == 0 || pairs > n) throw std::invalid_argument("even_leading_minor: stage out of range");
  const Matrix gram = a.transpose() * apply_j(a);
  const Matrix permuted = PermutationP(n).conjugate(gram);
  Matrix block(2 * pairs, 2 * pairs);
  for (std::size_t i = 0; i < 2 * pairs; ++i)
    for (std::size_t j = 0; j < 2 * pairs; ++j) block(i, j) = permuted(i, j);
  return determinant(std::move(block));
}

}  // namespace srkit
