#include "srkit/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "srkit/structure.hpp"

namespace srkit {

namespace {

double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

std::size_t window_half(std::span<const double> a, const char* context) {
  if (a.empty() || a.size() % 2 != 0) {
    throw std::invalid_argument(std::string(context) + ": vector length must be even and nonzero");
  }
  return a.size() / 2;
}

}  // namespace

VanLoanGivens vlg(std::size_t k, std::span<const double> a) {
  const std::size_t n = window_half(a, "vlg");
  if (k >= n) throw std::invalid_argument("vlg: plane index out of range");
  const double r = std::hypot(a[k], a[n + k]);
  if (r == 0.0) return {k, 1.0, 0.0};
  return {k, a[k] / r, a[n + k] / r};
}

VanLoanHouseholder vlh(std::size_t k, std::span<const double> a) {
  const std::size_t n = window_half(a, "vlh");
  if (k >= n) throw std::invalid_argument("vlh: start index out of range");
  const std::size_t len = n - k;
  double r1 = 0.0;
  for (std::size_t i = 1; i < len; ++i) r1 += a[k + i] * a[k + i];
  const double r = std::sqrt(a[k] * a[k] + r1);
  VanLoanHouseholder h{k, 0.0, std::vector<double>(len, 0.0)};
  if (r == 0.0) return h;  // zero active part: identity
  h.w[0] = a[k] + sign_of(a[k]) * r;
  for (std::size_t i = 1; i < len; ++i) h.w[i] = a[k + i];
  h.beta = 2.0 / (h.w[0] * h.w[0] + r1);
  return h;
}

GTransform gal(std::size_t k, std::span<const double> a, const ZeroThreshold& zero) {
  const std::size_t n = window_half(a, "gal");
  if (k + 1 >= n) throw std::invalid_argument("gal: index out of range");
  const double scale = norm2(a);
  if (zero.is_zero(a[k + 1], scale)) return {k + 1, 0.0};
  if (zero.is_zero(a[n + k], scale)) {
    throw BreakdownError(k + 1, a[k + 1], a[n + k],
                         "gal: elimination pivot vanished while the target entry is nonzero");
  }
  return {k + 1, -a[k + 1] / a[n + k]};
}

double sh2_default_mu(std::span<const double> a) {
  const std::size_t m = window_half(a, "sh2_default_mu");
  double acc = 0.0;
  for (std::size_t i = 1; i < m; ++i) acc += a[i] * a[i] + a[m + i] * a[m + i];
  return a[0] + sign_of(a[0]) * std::sqrt(acc);
}

SymplecticHouseholder sh2(std::span<const double> a, double mu) {
  const std::size_t m = window_half(a, "sh2");
  if (m == 1) return {0, 0.0, {0.0, 0.0}};
  const double nu = a[m];
  if (nu == 0.0) {
    double tail = 0.0;
    for (std::size_t i = 1; i < m; ++i) tail += a[i] * a[i] + a[m + i] * a[m + i];
    throw BreakdownError(1, std::sqrt(tail), 0.0, "sh2: division by zero, a[m] vanishes");
  }
  if (mu == a[0]) throw std::invalid_argument("sh2: free parameter must differ from a[0]");
  SymplecticHouseholder t{0, 0.0, std::vector<double>(2 * m, 0.0)};
  t.v[0] = mu - a[0];
  for (std::size_t i = 1; i < m; ++i) t.v[i] = -a[i];
  t.v[m] = 0.0;  // nu - a[m], exactly zero: this is what keeps T e_1 = e_1
  for (std::size_t i = 1; i < m; ++i) t.v[m + i] = -a[m + i];
  t.c = -1.0 / (nu * (a[0] - mu));
  return t;
}

SymplecticHouseholder sh2(std::span<const double> a) { return sh2(a, sh2_default_mu(a)); }

namespace {

void givens_left(const VanLoanGivens& g, Matrix& m) {
  const std::size_t n = m.half_order();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const double x = m(g.k, j);
    const double y = m(n + g.k, j);
    m(g.k, j) = g.c * x + g.s * y;
    m(n + g.k, j) = -g.s * x + g.c * y;
  }
}

// transpose = true applies J(k)^T from the right.
void givens_right(const VanLoanGivens& g, Matrix& m, bool transpose) {
  const std::size_t n = m.half_order();
  const double s = transpose ? -g.s : g.s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const double x = m(r, g.k);
    const double y = m(r, n + g.k);
    m(r, g.k) = g.c * x - s * y;
    m(r, n + g.k) = s * x + g.c * y;
  }
}

void householder_left(const VanLoanHouseholder& h, Matrix& m) {
  if (h.beta == 0.0) return;
  const std::size_t n = m.half_order();
  const std::size_t len = h.w.size();
  for (const std::size_t base : {h.k, n + h.k}) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      double t = 0.0;
      for (std::size_t i = 0; i < len; ++i) t += h.w[i] * m(base + i, j);
      t *= h.beta;
      for (std::size_t i = 0; i < len; ++i) m(base + i, j) -= t * h.w[i];
    }
  }
}

void householder_right(const VanLoanHouseholder& h, Matrix& m) {
  if (h.beta == 0.0) return;
  const std::size_t n = m.half_order();
  const std::size_t len = h.w.size();
  for (const std::size_t base : {h.k, n + h.k}) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      double t = 0.0;
      for (std::size_t i = 0; i < len; ++i) t += m(r, base + i) * h.w[i];
      t *= h.beta;
      for (std::size_t i = 0; i < len; ++i) m(r, base + i) -= t * h.w[i];
    }
  }
}

struct GCoefficients {
  double d;     // (1 + nu^2)^{-1/4}
  double f;     // nu * d
  double dinv;  // 1 / d
};

GCoefficients g_coefficients(const GTransform& g) {
  const double d = std::pow(1.0 + g.nu * g.nu, -0.25);
  return {d, g.nu * d, 1.0 / d};
}

void g_left(const GTransform& g, Matrix& m, bool adjoint) {
  const std::size_t n = m.half_order();
  if (g.pivot == 0 || g.pivot >= n) throw std::invalid_argument("GTransform: pivot out of range");
  const auto [d, f, dinv] = g_coefficients(g);
  const std::size_t p = g.pivot;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const double r1 = m(p - 1, j);
    const double r2 = m(p, j);
    const double s1 = m(n + p - 1, j);
    const double s2 = m(n + p, j);
    if (!adjoint) {
      m(p - 1, j) = d * r1 + f * s2;
      m(p, j) = d * r2 + f * s1;
      m(n + p - 1, j) = dinv * s1;
      m(n + p, j) = dinv * s2;
    } else {
      m(p - 1, j) = dinv * r1 - f * s2;
      m(p, j) = dinv * r2 - f * s1;
      m(n + p - 1, j) = d * s1;
      m(n + p, j) = d * s2;
    }
  }
}

void g_right(const GTransform& g, Matrix& m, bool adjoint) {
  const std::size_t n = m.half_order();
  if (g.pivot == 0 || g.pivot >= n) throw std::invalid_argument("GTransform: pivot out of range");
  const auto [d, f, dinv] = g_coefficients(g);
  const std::size_t p = g.pivot;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const double c1 = m(r, p - 1);
    const double c2 = m(r, p);
    const double s1 = m(r, n + p - 1);
    const double s2 = m(r, n + p);
    if (!adjoint) {
      m(r, p - 1) = d * c1;
      m(r, p) = d * c2;
      m(r, n + p - 1) = f * c2 + dinv * s1;
      m(r, n + p) = f * c1 + dinv * s2;
    } else {
      m(r, p - 1) = dinv * c1;
      m(r, p) = dinv * c2;
      m(r, n + p - 1) = -f * c2 + d * s1;
      m(r, n + p) = -f * c1 + d * s2;
    }
  }
}

void sympl_householder_left_column(const SymplecticHouseholder& t, Matrix& m, std::size_t n,
                                   double c, std::size_t j) {
  const std::size_t mh = t.window_half();
  // u = v^T J column: first-half rows pair with the negated second half of v.
  double u = 0.0;
  for (std::size_t i = 0; i < mh; ++i) {
    u -= t.v[mh + i] * m(t.start + i, j);
    u += t.v[i] * m(n + t.start + i, j);
  }
  u *= c;
  for (std::size_t i = 0; i < mh; ++i) {
    m(t.start + i, j) += t.v[i] * u;
    m(n + t.start + i, j) += t.v[mh + i] * u;
  }
}

void sympl_householder_left(const SymplecticHouseholder& t, Matrix& m, bool adjoint) {
  if (t.c == 0.0) return;
  const std::size_t n = m.half_order();
  if (t.start + t.window_half() > n) {
    throw std::invalid_argument("SymplecticHouseholder: window out of range");
  }
  const double c = adjoint ? -t.c : t.c;
  for (std::size_t j = 0; j < m.cols(); ++j) sympl_householder_left_column(t, m, n, c, j);
}

void sympl_householder_right(const SymplecticHouseholder& t, Matrix& m, bool adjoint) {
  if (t.c == 0.0) return;
  const std::size_t n = m.half_order();
  const std::size_t mh = t.window_half();
  if (t.start + mh > n) throw std::invalid_argument("SymplecticHouseholder: window out of range");
  const double c = adjoint ? -t.c : t.c;
  std::vector<double> z(m.rows(), 0.0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double acc = 0.0;
    for (std::size_t i = 0; i < mh; ++i) {
      acc += m(r, t.start + i) * t.v[i];
      acc += m(r, n + t.start + i) * t.v[mh + i];
    }
    z[r] = c * acc;
  }
  // (v^T J) restricted to the window columns.
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t i = 0; i < mh; ++i) {
      m(r, t.start + i) += z[r] * (-t.v[mh + i]);
      m(r, n + t.start + i) += z[r] * t.v[i];
    }
  }
}

}  // namespace

void apply_left_in(const ElementaryTransform& t, Matrix& m) {
  std::visit(
      [&m](const auto& op) {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, VanLoanGivens>) {
          givens_left(op, m);
        } else if constexpr (std::is_same_v<T, VanLoanHouseholder>) {
          householder_left(op, m);
        } else if constexpr (std::is_same_v<T, GTransform>) {
          g_left(op, m, false);
        } else {
          sympl_householder_left(op, m, false);
        }
      },
      t);
}

void apply_right_in(const ElementaryTransform& t, Matrix& m) {
  std::visit(
      [&m](const auto& op) {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, VanLoanGivens>) {
          givens_right(op, m, false);
        } else if constexpr (std::is_same_v<T, VanLoanHouseholder>) {
          householder_right(op, m);
        } else if constexpr (std::is_same_v<T, GTransform>) {
          g_right(op, m, false);
        } else {
          sympl_householder_right(op, m, false);
        }
      },
      t);
}

void apply_right_adjoint_in(const ElementaryTransform& t, Matrix& m) {
  std::visit(
      [&m](const auto& op) {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, VanLoanGivens>) {
          givens_right(op, m, true);
        } else if constexpr (std::is_same_v<T, VanLoanHouseholder>) {
          householder_right(op, m);  // symmetric and orthogonal
        } else if constexpr (std::is_same_v<T, GTransform>) {
          g_right(op, m, true);
        } else {
          sympl_householder_right(op, m, true);
        }
      },
      t);
}

Matrix apply_left(const ElementaryTransform& t, Matrix m) {
  apply_left_in(t, m);
  return m;
}

Matrix apply_right(const ElementaryTransform& t, Matrix m) {
  apply_right_in(t, m);
  return m;
}

Matrix apply_right_adjoint(const ElementaryTransform& t, Matrix m) {
  apply_right_adjoint_in(t, m);
  return m;
}

Matrix apply_similarity(const ElementaryTransform& t, Matrix m) {
  apply_left_in(t, m);
  apply_right_adjoint_in(t, m);
  return m;
}

void apply_left_on_columns_in(const SymplecticHouseholder& t, Matrix& m,
                              std::span<const std::size_t> columns) {
  if (t.c == 0.0) return;
  const std::size_t n = m.half_order();
  if (t.start + t.window_half() > n) {
    throw std::invalid_argument("SymplecticHouseholder: window out of range");
  }
  for (std::size_t j : columns) sympl_householder_left_column(t, m, n, t.c, j);
}

Matrix assemble(const ElementaryTransform& t, std::size_t two_n) {
  if (two_n == 0 || two_n % 2 != 0) throw std::invalid_argument("assemble: order must be even");
  const std::size_t n = two_n / 2;
  Matrix m = Matrix::identity(two_n);
  std::visit(
      [&](const auto& op) {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, VanLoanGivens>) {
          m(op.k, op.k) = op.c;
          m(op.k, n + op.k) = op.s;
          m(n + op.k, op.k) = -op.s;
          m(n + op.k, n + op.k) = op.c;
        } else if constexpr (std::is_same_v<T, VanLoanHouseholder>) {
          if (op.beta == 0.0) return;
          for (const std::size_t base : {op.k, n + op.k}) {
            for (std::size_t i = 0; i < op.w.size(); ++i)
              for (std::size_t j = 0; j < op.w.size(); ++j)
                m(base + i, base + j) -= op.beta * op.w[i] * op.w[j];
          }
        } else if constexpr (std::is_same_v<T, GTransform>) {
          const auto [d, f, dinv] = g_coefficients(op);
          const std::size_t p = op.pivot;
          m(p - 1, p - 1) = d;
          m(p, p) = d;
          m(n + p - 1, n + p - 1) = dinv;
          m(n + p, n + p) = dinv;
          m(p - 1, n + p) = f;
          m(p, n + p - 1) = f;
        } else {
          const std::size_t mh = op.window_half();
          std::vector<double> scattered(two_n, 0.0);
          for (std::size_t i = 0; i < mh; ++i) {
            scattered[op.start + i] = op.v[i];
            scattered[n + op.start + i] = op.v[mh + i];
          }
          const std::vector<double> row = symplectic_adjoint(std::span<const double>(scattered));
          for (std::size_t r = 0; r < two_n; ++r)
            for (std::size_t c = 0; c < two_n; ++c) m(r, c) += op.c * scattered[r] * row[c];
        }
      },
      t);
  return m;
}

Matrix assemble_adjoint(const ElementaryTransform& t, std::size_t two_n) {
  return symplectic_adjoint(assemble(t, two_n));
}

Matrix householder_core(std::span<const double> seg) {
  const std::size_t k = seg.size();
  Matrix core = Matrix::identity(k);
  double tail = 0.0;
  for (std::size_t i = 1; i < k; ++i) tail += seg[i] * seg[i];
  if (tail == 0.0) return core;  // nothing to annihilate
  const double r = std::sqrt(seg[0] * seg[0] + tail);
  std::vector<double> w(seg.begin(), seg.end());
  w[0] += sign_of(seg[0]) * r;
  const double beta = 2.0 / (w[0] * w[0] + tail);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) core(i, j) -= beta * w[i] * w[j];
  return core;
}

Matrix givens_core(double a, double b) {
  Matrix core = Matrix::identity(2);
  if (b == 0.0) return core;
  const double r = std::hypot(a, b);
  core(0, 0) = a / r;
  core(0, 1) = b / r;
  core(1, 0) = -b / r;
  core(1, 1) = a / r;
  return core;
}

void apply_block_similarity_in(const Matrix& core, std::size_t j, Matrix& m) {
  const std::size_t n = m.half_order();
  const std::size_t k = core.rows();
  if (!core.is_square() || j + k > n) {
    throw std::invalid_argument("apply_block_similarity: core does not fit");
  }
  std::vector<double> tmp(k);
  for (const std::size_t base : {j, n + j}) {
    for (std::size_t col = 0; col < m.cols(); ++col) {
      for (std::size_t i = 0; i < k; ++i) {
        double acc = 0.0;
        for (std::size_t c = 0; c < k; ++c) acc += core(i, c) * m(base + c, col);
        tmp[i] = acc;
      }
      for (std::size_t i = 0; i < k; ++i) m(base + i, col) = tmp[i];
    }
  }
  accumulate_block_transpose_in(core, j, m);
}

Matrix apply_block_similarity(const Matrix& core, std::size_t j, Matrix m) {
  apply_block_similarity_in(core, j, m);
  return m;
}

void accumulate_block_transpose_in(const Matrix& core, std::size_t j, Matrix& m) {
  const std::size_t n = m.half_order();
  const std::size_t k = core.rows();
  if (!core.is_square() || j + k > n) {
    throw std::invalid_argument("accumulate_block_transpose: core does not fit");
  }
  std::vector<double> tmp(k);
  for (const std::size_t base : {j, n + j}) {
    for (std::size_t row = 0; row < m.rows(); ++row) {
      for (std::size_t i = 0; i < k; ++i) {
        double acc = 0.0;
        for (std::size_t c = 0; c < k; ++c) acc += m(row, base + c) * core(i, c);
        tmp[i] = acc;
      }
      for (std::size_t i = 0; i < k; ++i) m(row, base + i) = tmp[i];
    }
  }
}

CuringReflector build_curing_reflector(const Matrix& h, std::size_t j, CureKind kind,
                                       std::size_t block_size) {
  require_even_square(h, "build_curing_reflector");
  const std::size_t n = h.half_order();
  if (j + 1 >= n) throw std::invalid_argument("build_curing_reflector: column out of range");
  std::size_t k = kind == CureKind::block ? block_size : 2;
  k = std::clamp<std::size_t>(k, 2, n - j);

  CuringReflector cure{j, kind, Matrix(), std::nullopt};
  std::vector<double> seg(k);
  for (std::size_t i = 0; i < k; ++i) seg[i] = h(j + i, j);
  cure.primary = (kind == CureKind::givens2) ? givens_core(seg[0], seg[1]) : householder_core(seg);

  if (j >= 1) {
    // The fixup repairs the entries the primary similarity may reintroduce in
    // column n+j-1; build it from the state after that similarity.
    Matrix after = apply_block_similarity(cure.primary, j, h);
    for (std::size_t i = 0; i < k; ++i) seg[i] = after(j + i, n + j - 1);
    cure.fixup = (kind == CureKind::givens2) ? givens_core(seg[0], seg[1]) : householder_core(seg);
  }
  return cure;
}

Matrix apply_cure(const CuringReflector& cure, Matrix m) {
  apply_block_similarity_in(cure.primary, cure.j, m);
  if (cure.fixup) apply_block_similarity_in(*cure.fixup, cure.j, m);
  return m;
}

}  // namespace srkit
