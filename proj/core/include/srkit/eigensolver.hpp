#pragma once

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "srkit/matrix.hpp"
#include "srkit/reduction.hpp"

namespace srkit {

enum class ReductionVariant { mjhess, jhm2sh };

struct EigenConfig {
  ReductionVariant variant = ReductionVariant::mjhess;
  ReductionConfig reduction{.cure = true};
  double deflation_eps = 1e-12;          // relative decoupling threshold
  std::size_t max_iterations_per_n = 30; // cap: 30 n total iterations
  std::size_t max_restarts = 5;
  std::size_t restart_block = 2;
  std::uint64_t seed = 0x5eed5eedULL;
};

/// p(x) = x - shift (degree 1) or x^2 - trace x + det (degree 2, the monic
/// polynomial with the given trace and determinant of its root pair).
struct ShiftPolynomial {
  int degree = 1;
  double shift = 0.0;
  double trace = 0.0;
  double det = 0.0;

  static ShiftPolynomial single(double shift) { return {1, shift, 0.0, 0.0}; }
  static ShiftPolynomial pair(double trace, double det) { return {2, 0.0, trace, det}; }
};

struct RestartEvent {
  std::size_t iteration = 0;
  std::size_t column = 0;  // 1-based stage of the failed inner elimination
  std::size_t block = 0;
};

/// Iteration state: the current J-Hessenberg iterate, the accumulated
/// symplectic similarity, and the restart ledger.
struct SRIterationState {
  Matrix m;
  Matrix s;
  std::size_t iteration = 0;
  std::vector<RestartEvent> restarts;
  std::mt19937_64 rng;
};

struct StepOutcome {
  bool applied = false;
  std::size_t restart_column = 0;  // set when the inner factorization balked
};

/// One iteration: factor p(M) = S_k R_k, then replace M by S_k^J M S_k and
/// fold S_k into the accumulated similarity. An inner breakdown or
/// near-breakdown leaves the state untouched and requests a restart.
StepOutcome sr_step(SRIterationState& state, const ShiftPolynomial& p, const EigenConfig& config);

/// Exceptional orthogonal-symplectic similarity with a random block reflector
/// at the given 0-based column, followed by restoration of the J-Hessenberg
/// pattern. Preserves the spectrum exactly.
void restart_similarity(SRIterationState& state, std::size_t column, std::size_t block,
                        const EigenConfig& config);

struct Eigenvalue {
  std::complex<double> value;
  double residual = 0.0;  // magnitude of the coupling neglected when the block decoupled
};

struct Spectrum {
  std::vector<Eigenvalue> values;  // 2n values, conjugate pairs adjacent
  std::size_t iterations = 0;
  std::size_t restarts = 0;
  bool converged = false;
};

/// Reduces a to upper J-Hessenberg form, runs the shifted iteration with
/// deflation, and reads the spectrum off the decoupled 2x2 blocks. Hits of the
/// iteration cap return the partial result with residuals; exhausting the
/// restart budget throws RestartBudgetError.
Spectrum solve_spectrum(const Matrix& a, const EigenConfig& config = {});

}  // namespace srkit
