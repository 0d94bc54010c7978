#include "srkit/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "srkit/sr.hpp"
#include "srkit/structure.hpp"

namespace srkit {

namespace {

Matrix evaluate_polynomial(const ShiftPolynomial& p, const Matrix& m) {
  if (p.degree == 1) {
    Matrix out = m;
    for (std::size_t i = 0; i < out.rows(); ++i) out(i, i) -= p.shift;
    return out;
  }
  if (p.degree != 2) throw std::invalid_argument("sr_step: shift polynomial degree must be 1 or 2");
  Matrix out = m * m;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) -= p.trace * m(i, j);
    out(i, i) += p.det;
  }
  return out;
}

// Sets pattern positions that carry only roundoff back to exact zero, so the
// iterate stays a clean upper J-Hessenberg matrix.
void scrub_pattern_noise(Matrix& m) {
  const std::size_t n = m.half_order();
  const double tol = 1e-12 * max_abs(m);
  const auto scrub = [&](std::size_t r, std::size_t c) {
    if (std::abs(m(r, c)) <= tol) m(r, c) = 0.0;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j) {
        scrub(i, j);
        scrub(n + i, j);
        scrub(n + i, n + j);
      }
      if (i > j + 1) scrub(i, n + j);
    }
  }
}

struct BlockEigen {
  std::complex<double> first;
  std::complex<double> second;
};

// Eigenvalues of [[b11, b12], [b21, b22]] by the stabilized quadratic formula.
BlockEigen two_by_two_eigen(double b11, double b12, double b21, double b22) {
  const double tr = b11 + b22;
  const double det = b11 * b22 - b12 * b21;
  const double disc = tr * tr - 4.0 * det;
  if (disc < 0.0) {
    const double re = 0.5 * tr;
    const double im = 0.5 * std::sqrt(-disc);
    return {{re, im}, {re, -im}};
  }
  const double root = std::sqrt(disc);
  const double l1 = 0.5 * (tr + (tr >= 0.0 ? root : -root));
  const double l2 = (l1 != 0.0) ? det / l1 : 0.5 * (tr - (tr >= 0.0 ? root : -root));
  return {{l1, 0.0}, {l2, 0.0}};
}

ShiftPolynomial choose_shift(const Matrix& m, std::size_t block_end, double eps) {
  const std::size_t n = m.half_order();
  const double b11 = m(block_end, block_end);
  const double b12 = m(block_end, n + block_end);
  const double b21 = m(n + block_end, block_end);
  const double b22 = m(n + block_end, n + block_end);
  const double tr = b11 + b22;
  const double det = b11 * b22 - b12 * b21;
  const double disc = tr * tr - 4.0 * det;
  const double scale = std::abs(b11) + std::abs(b12) + std::abs(b21) + std::abs(b22);

  // Complex pair, or a real pair already revealed on the block diagonal:
  // shift with the whole pair so the block decouples as one unit.
  if (disc < 0.0 || std::abs(b21) <= eps * scale) return ShiftPolynomial::pair(tr, det);

  // Coupled real pair: single shift with the root nearest the trailing entry.
  const BlockEigen roots = two_by_two_eigen(b11, b12, b21, b22);
  const double l1 = roots.first.real();
  const double l2 = roots.second.real();
  return ShiftPolynomial::single(std::abs(l1 - b22) <= std::abs(l2 - b22) ? l1 : l2);
}

}  // namespace

StepOutcome sr_step(SRIterationState& state, const ShiftPolynomial& p, const EigenConfig& config) {
  const Matrix pm = evaluate_polynomial(p, state.m);
  SRConfig inner{config.reduction.tau, config.reduction.zero, config.reduction.mu};
  SRFactors factors;
  try {
    factors = srmsh(pm, inner);
  } catch (const BreakdownError& error) {
    return {false, error.step};
  }
  for (const ReductionEvent& event : factors.events) {
    if (event.kind == EventKind::near_breakdown) return {false, event.step};
  }
  state.m = symplectic_adjoint(factors.s) * state.m * factors.s;
  state.s = state.s * factors.s;
  scrub_pattern_noise(state.m);
  ++state.iteration;
  return {true, 0};
}

void restart_similarity(SRIterationState& state, std::size_t column, std::size_t block,
                        const EigenConfig& config) {
  const std::size_t n = state.m.half_order();
  if (n < 2) return;
  const std::size_t j = std::min(column, n - 2);
  const std::size_t width = std::clamp<std::size_t>(block, 2, n - j);

  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> direction(width);
  double norm_sq = 0.0;
  do {
    norm_sq = 0.0;
    for (double& v : direction) {
      v = normal(state.rng);
      norm_sq += v * v;
    }
  } while (norm_sq == 0.0);
  Matrix core = Matrix::identity(width);
  for (std::size_t r = 0; r < width; ++r)
    for (std::size_t c = 0; c < width; ++c) core(r, c) -= 2.0 * direction[r] * direction[c] / norm_sq;

  apply_block_similarity_in(core, j, state.m);
  accumulate_block_transpose_in(core, j, state.s);

  ReductionConfig restore = config.reduction;
  restore.cure = true;
  std::vector<ReductionEvent> events;
  restore_j_hessenberg(state.m, state.s, j > 0 ? j - 1 : 0, restore, events);
  state.restarts.push_back({state.iteration, column + 1, width});
}

Spectrum solve_spectrum(const Matrix& a, const EigenConfig& config) {
  require_even_square(a, "solve_spectrum");
  const std::size_t n = a.half_order();

  Spectrum spectrum;
  if (n == 1) {
    const BlockEigen roots = two_by_two_eigen(a(0, 0), a(0, 1), a(1, 0), a(1, 1));
    spectrum.values = {{roots.first, 0.0}, {roots.second, 0.0}};
    spectrum.converged = true;
    return spectrum;
  }

  ReductionConfig reduction = config.reduction;
  reduction.cure = true;
  const JHessResult reduced = config.variant == ReductionVariant::mjhess
                                  ? mjhess(a, reduction)
                                  : jhm2sh(a, reduction);

  SRIterationState state{reduced.h, reduced.s, 0, {}, std::mt19937_64(config.seed)};
  std::vector<double> neglected(n - 1, 0.0);
  std::vector<bool> decoupled(n - 1, false);
  const std::size_t cap = config.max_iterations_per_n * n;
  bool done = false;

  while (state.iteration < cap) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (decoupled[i]) continue;
      double scale = std::abs(state.m(i, n + i)) + std::abs(state.m(i + 1, n + i + 1));
      if (scale == 0.0) scale = max_abs(state.m);
      if (std::abs(state.m(i + 1, n + i)) <= config.deflation_eps * scale) {
        neglected[i] = std::abs(state.m(i + 1, n + i));
        state.m(i + 1, n + i) = 0.0;
        decoupled[i] = true;
      }
    }

    std::size_t block_end = n - 1;
    while (block_end > 0 && decoupled[block_end - 1]) --block_end;
    if (block_end == 0) {
      done = true;
      break;
    }

    const ShiftPolynomial poly = choose_shift(state.m, block_end, config.deflation_eps);
    const StepOutcome outcome = sr_step(state, poly, config);
    if (!outcome.applied) {
      if (state.restarts.size() >= config.max_restarts) {
        throw RestartBudgetError("solve_spectrum: restart budget exhausted");
      }
      const std::size_t column = outcome.restart_column > 0 ? outcome.restart_column - 1 : block_end;
      restart_similarity(state, column, config.restart_block, config);
      // The exceptional similarity may have re-coupled trailing blocks.
      std::fill(decoupled.begin(), decoupled.end(), false);
    }
  }

  spectrum.converged = done;
  spectrum.iterations = state.iteration;
  spectrum.restarts = state.restarts.size();
  spectrum.values.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const BlockEigen roots =
        two_by_two_eigen(state.m(i, i), state.m(i, n + i), state.m(n + i, i), state.m(n + i, n + i));
    double residual = 0.0;
    if (i > 0) {
      residual = decoupled[i - 1] ? neglected[i - 1] : std::abs(state.m(i, n + i - 1));
    }
    if (i + 1 < n) {
      const double right = decoupled[i] ? neglected[i] : std::abs(state.m(i + 1, n + i));
      residual = std::max(residual, right);
    }
    spectrum.values.push_back({roots.first, residual});
    spectrum.values.push_back({roots.second, residual});
  }
  return spectrum;
}

}  // namespace srkit
