#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "srkit/events.hpp"
#include "srkit/matrix.hpp"
#include "srkit/transforms.hpp"

namespace srkit {

struct SRConfig {
  double tau = 1e8;          // near-breakdown threshold on |r_{j+1,n+j} / r_{n+j,n+j}|
  ZeroThreshold zero;
  std::optional<double> mu;  // fixed free parameter for srmsh; default policy otherwise
};

/// A = S R with S symplectic and R upper J-triangular. Residuals are
/// spectral-norm values recomputed from the returned factors.
struct SRFactors {
  Matrix s;
  Matrix r;
  double residual = 0.0;              // ||A - S R||_2
  double symplecticity_defect = 0.0;  // ||S^J S - I||_2
  std::vector<ReductionEvent> events;
};

/// Called after the stage's column pair has been triangularized, right before
/// the stopping test; receives the 1-based stage and the working matrix.
using SRStageObserver = std::function<void(std::size_t, const Matrix&)>;

/// Factorization by Givens/Householder sweeps with one non-orthogonal
/// G-elimination per stage. Throws BreakdownError when that elimination does
/// not exist.
SRFactors srdeco(const Matrix& a, const SRConfig& config = {}, const SRStageObserver& observe = {});

/// Same sweep structure with the G-elimination replaced by a rank-one
/// symplectic Householder step. Succeeds and fails on exactly the same inputs
/// as srdeco.
SRFactors srmsh(const Matrix& a, const SRConfig& config = {}, const SRStageObserver& observe = {});

/// Left side: brute-force even leading minor of the skew Gram matrix of a.
/// Right side: squared product of the working diagonal entries at the given
/// stage. The two agree for every reachable stage.
struct MinorIdentity {
  double brute_force = 0.0;
  double product_formula = 0.0;
};

MinorIdentity verify_minor_identity(const Matrix& a, std::size_t stage, const SRConfig& config = {});

/// Existence diagnosis: runs the factorization pipeline, records the decisive
/// coefficients per stage, and never throws.
struct ExistenceDiagnosis {
  struct StageRecord {
    std::size_t stage = 0;      // 1-based
    double pivot_entry = 0.0;   // r_{n+j, n+j}
    double sub_entry = 0.0;     // r_{j+1, n+j}
  };
  struct MinorCheck {
    std::size_t stage = 0;
    double brute_force = 0.0;
    double product_formula = 0.0;
  };

  bool exists = false;
  std::size_t failure_stage = 0;  // 1-based; 0 when the factorization exists
  std::vector<StageRecord> stages;
  std::vector<MinorCheck> minor_checks;
  double det = 0.0;
  bool nonsingular = false;
  bool corollary_checked = false;     // evaluated only for nonsingular inputs
  bool corollary_consistent = false;  // exists <=> all pivots r_{n+j,n+j} nonzero
};

ExistenceDiagnosis diagnose_existence(const Matrix& a, const SRConfig& config = {});

}  // namespace srkit
