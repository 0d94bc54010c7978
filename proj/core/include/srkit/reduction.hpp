#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "srkit/events.hpp"
#include "srkit/matrix.hpp"
#include "srkit/transforms.hpp"

namespace srkit {

struct ReductionConfig {
  double tau = 1e8;      // near-breakdown threshold on |h_{j+1,j} / h_{n+j,j}|
  ZeroThreshold zero;
  bool cure = false;     // repair breakdowns/near-breakdowns instead of stopping
  CureKind cure_kind = CureKind::householder2;
  std::size_t cure_block = 2;  // core size for CureKind::block
  std::size_t max_cures = 2;   // retries per column before giving up
  std::optional<double> mu;    // fixed sh2 parameter; default policy otherwise
};

/// A = S H S^{-1} with S symplectic and H upper J-Hessenberg, plus the event
/// ledger of everything that went wrong along the way.
struct JHessResult {
  Matrix s;
  Matrix h;
  std::vector<ReductionEvent> events;
  double residual = 0.0;                // ||A - S H S^{-1}||_2
  double j_orthogonality_defect = 0.0;  // ||S^J S - I||_2
  // The first column of S is a multiple of e_1 unless a cure fired at step 1.
  bool first_column_normalized = true;
};

enum class ReductionPhase { stage_done, cure_done };

/// Receives the working matrix after each completed stage and after each
/// completed cure (primary plus fixup). Stages are reported 1-based.
using ReductionObserver = std::function<void(ReductionPhase, std::size_t, const Matrix&)>;

/// Givens/Householder/G-elimination reduction to upper J-Hessenberg form by
/// symplectic similarity. Without curing, throws BreakdownError when the
/// G-elimination pivot vanishes; near-breakdowns are recorded as events.
JHessResult jhess(const Matrix& a, const ReductionConfig& config = {},
                  const ReductionObserver& observe = {});

/// Variant driven by rank-one symplectic Householder eliminations; one
/// transform per column replaces the Givens sweep plus Householder pair on
/// the first-half columns. Breaks down under exactly the same conditions.
JHessResult jhmsh(const Matrix& a, const ReductionConfig& config = {},
                  const ReductionObserver& observe = {});

/// jhess with the orthogonal curing strategy enabled: breakdowns and
/// near-breakdowns are repaired by block reflector similarities and the stage
/// is re-entered. Throws only CureBudgetError.
JHessResult mjhess(const Matrix& a, ReductionConfig config = {},
                   const ReductionObserver& observe = {});

/// jhmsh with the same curing strategy.
JHessResult jhm2sh(const Matrix& a, ReductionConfig config = {},
                   const ReductionObserver& observe = {});

/// Elimination-order twin of jhm2sh; numerically interchangeable with it.
JHessResult jhm2sh2(const Matrix& a, ReductionConfig config = {},
                    const ReductionObserver& observe = {});

/// Re-establishes the J-Hessenberg pattern of h from the given 0-based stage
/// onward, accumulating the applied similarities into s. Used after an
/// exceptional block similarity has perturbed the trailing part.
void restore_j_hessenberg(Matrix& h, Matrix& s, std::size_t first_stage,
                          const ReductionConfig& config, std::vector<ReductionEvent>& events);

/// Two reductions of the same matrix differ by a block-diagonal equivalence
/// D = [[C, F], [0, C^{-1}]] with C, F diagonal: S1 D = S2 and
/// D^{-1} H1 D = H2. Returns D, its diagonals, and the defect norms.
struct DiagEquivalence {
  Matrix d;
  std::vector<double> c;
  std::vector<double> f;
  double pattern_defect = 0.0;     // largest entry outside the allowed pattern
  double inverse_defect = 0.0;     // max |C_i * D_{n+i,n+i} - 1|
  double similarity_defect = 0.0;  // ||D^{-1} H1 D - H2||_2
};

DiagEquivalence diag_equivalence(const Matrix& s1, const Matrix& h1, const Matrix& s2,
                                 const Matrix& h2);

}  // namespace srkit
