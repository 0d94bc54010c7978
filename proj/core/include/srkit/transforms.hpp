#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "srkit/events.hpp"
#include "srkit/matrix.hpp"

namespace srkit {

/// Rotation in planes k and n+k, acting identically on both halves:
/// [[C, S], [-S, C]] with C = diag(I_k, c, I), S = diag(0_k, s, 0).
struct VanLoanGivens {
  std::size_t k = 0;  // 0-based plane index, k < n
  double c = 1.0;
  double s = 0.0;
};

/// Direct sum of one reflector applied to rows k..n-1 of both halves:
/// diag(I_k, P, I_k, P) with P = I - beta w w^T.
struct VanLoanHouseholder {
  std::size_t k = 0;       // 0-based start row of the active part
  double beta = 0.0;       // 0 with empty/zero w means identity
  std::vector<double> w;   // length n - k
};

/// Symplectic, non-orthogonal transform [[D, F], [0, D^{-1}]] whose nontrivial
/// action mixes rows pivot-1, pivot with rows n+pivot, n+pivot-1. Conditioning
/// grows with |nu|; this is the only breakdown source in the eliminations.
struct GTransform {
  std::size_t pivot = 1;  // 0-based, 1 <= pivot < n
  double nu = 0.0;
};

/// Rank-one modification of the identity T = I + c v v^T J, with the
/// direction v supported on the window rows [start, n) u [n+start, 2n).
struct SymplecticHouseholder {
  std::size_t start = 0;
  double c = 0.0;
  std::vector<double> v;  // window-local, even length

  std::size_t window_half() const { return v.size() / 2; }
};

using ElementaryTransform =
    std::variant<VanLoanGivens, VanLoanHouseholder, GTransform, SymplecticHouseholder>;

/// Coefficients zeroing component n+k of a: c = a[k]/r, s = a[n+k]/r with
/// r = hypot; the degenerate r = 0 yields the identity rotation.
VanLoanGivens vlg(std::size_t k, std::span<const double> a);

/// Reflector zeroing components k+1..n-1 of a, with the usual anti-cancellation
/// sign w_0 = a[k] + sign(a[k]) r. A zero active part yields the identity.
VanLoanHouseholder vlh(std::size_t k, std::span<const double> a);

/// nu = -a[k+1]/a[n+k]; the returned transform (pivot k+1) zeroes component
/// k+1 of a. a[k+1] already zero gives nu = 0. a[n+k] zero with a[k+1] not is
/// the breakdown case and throws.
GTransform gal(std::size_t k, std::span<const double> a, const ZeroThreshold& zero = {});

/// Anti-cancellation default for the free parameter of sh2: a[0] plus the
/// signed norm of the components the transform must annihilate.
double sh2_default_mu(std::span<const double> a);

/// T with T e_1 = e_1 and T a = mu e_1 + nu e_{m+1} (m = half window size),
/// where nu = a[m]. Throws BreakdownError when a[m] = 0 and
/// std::invalid_argument when mu = a[0]. For m = 1 returns the identity.
SymplecticHouseholder sh2(std::span<const double> a, double mu);
SymplecticHouseholder sh2(std::span<const double> a);  // with the default mu

// Structured applications. Only the structurally active rows/columns of m are
// touched; everything else is left bit-identical.
void apply_left_in(const ElementaryTransform& t, Matrix& m);
void apply_right_in(const ElementaryTransform& t, Matrix& m);
void apply_right_adjoint_in(const ElementaryTransform& t, Matrix& m);  // m <- m T^J

Matrix apply_left(const ElementaryTransform& t, Matrix m);
Matrix apply_right(const ElementaryTransform& t, Matrix m);
Matrix apply_right_adjoint(const ElementaryTransform& t, Matrix m);

/// T m T^{-1}. All four families satisfy T^{-1} = T^J.
Matrix apply_similarity(const ElementaryTransform& t, Matrix m);

/// Left application restricted to the given columns. The elimination drivers
/// use this where the skipped columns are unchanged by construction, keeping
/// them bit-identical instead of accumulating rank-one noise.
void apply_left_on_columns_in(const SymplecticHouseholder& t, Matrix& m,
                              std::span<const std::size_t> columns);

/// Dense 2n x 2n realization, used as the multiply oracle in tests.
Matrix assemble(const ElementaryTransform& t, std::size_t two_n);
Matrix assemble_adjoint(const ElementaryTransform& t, std::size_t two_n);

/// Orthogonal-symplectic block similarity diag(P, P) with
/// P = diag(I_j, core, I): the stable escape hatch applied when an
/// elimination pivot vanishes or the step turns ill-conditioned.
struct CuringReflector {
  std::size_t j = 0;       // 0-based pivot column
  CureKind kind = CureKind::householder2;
  Matrix primary;          // orthogonal core, zeroes (j+1, j)
  std::optional<Matrix> fixup;  // zeroes the entries reintroduced in column n+j-1
};

/// Builds the cure for column j of h. The primary core rotates
/// (h[j][j], ..., h[j+k-1][j]) onto the first axis; the fixup core (absent for
/// j = 0) repairs column n+j-1 and is constructed from the state after the
/// primary similarity.
CuringReflector build_curing_reflector(const Matrix& h, std::size_t j, CureKind kind,
                                       std::size_t block_size = 2);

/// diag(I_j, core, I, I_j, core, I) conjugation; shared by cures and the
/// eigensolver's exceptional restarts.
void apply_block_similarity_in(const Matrix& core, std::size_t j, Matrix& m);
Matrix apply_block_similarity(const Matrix& core, std::size_t j, Matrix m);

/// m <- m * diag(P, P)^T for the same block structure (accumulates the
/// transforming matrix).
void accumulate_block_transpose_in(const Matrix& core, std::size_t j, Matrix& m);

/// Applies primary and fixup similarities of the cure.
Matrix apply_cure(const CuringReflector& cure, Matrix m);

/// k x k orthogonal core rotating seg onto the first axis (identity when
/// nothing to annihilate).
Matrix householder_core(std::span<const double> seg);
Matrix givens_core(double a, double b);

}  // namespace srkit
