#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "srkit/matrix.hpp"

namespace srkit {

// The skew form on R^{2n} is x^T J y with J = [[0, I], [-I, 0]]. J is never
// stored densely; it acts by block swap-and-negate.

/// J x for a vector of even length: out[i] = x[n+i], out[n+i] = -x[i].
std::vector<double> apply_j(std::span<const double> x);

/// J M, applied row-wise with the same swap-and-negate rule.
Matrix apply_j(const Matrix& m);

/// Dense J_{2n}, for oracle-style checks.
Matrix j_matrix(std::size_t half_order);

/// Skew inner product x^T J y. Antisymmetric; vanishes on the diagonal.
double skew_inner(std::span<const double> x, std::span<const double> y);

/// Symplectic adjoint x^J = x^T J, returned as a row vector.
std::vector<double> symplectic_adjoint(std::span<const double> x);

/// Symplectic adjoint M^J = J_{2k}^T M^T J_{2n} of a 2n x 2k matrix.
Matrix symplectic_adjoint(const Matrix& m);

/// Columns (e_1, e_{n+1}, e_2, e_{n+2}, ...): interleaves the two halves.
/// Conjugation by it turns the J-triangular / J-Hessenberg block patterns
/// into plain triangular / Hessenberg ones.
class PermutationP {
 public:
  explicit PermutationP(std::size_t half_order);

  std::size_t half_order() const { return half_order_; }

  /// order()[r] = source index of interleaved position r.
  const std::vector<std::size_t>& order() const { return order_; }

  Matrix to_matrix() const;

  /// P^T A P.
  Matrix conjugate(const Matrix& a) const;

 private:
  std::size_t half_order_;
  std::vector<std::size_t> order_;
};

struct StructureCheck {
  bool holds = false;
  double defect = 0.0;  // largest offending magnitude
};

/// Pattern and symplecticity diagnostics for a 2n x 2n matrix. Defects use
/// the max-entry norm; flags compare them against the stored tolerance.
struct StructureReport {
  StructureCheck symplectic;
  StructureCheck j_triangular;
  StructureCheck upper_j_hessenberg;
  bool unreduced = false;
  double tolerance = 0.0;
};

StructureReport check_structure(const Matrix& m, double tolerance);

/// Largest magnitude among entries a J-triangular matrix requires to vanish.
double j_triangular_defect(const Matrix& m);

/// Largest magnitude among entries an upper J-Hessenberg matrix requires to vanish.
double j_hessenberg_defect(const Matrix& m);

/// ||M^J M - I|| in the max-entry norm.
double symplecticity_defect(const Matrix& m);

/// Same residual in the spectral norm, as reported in run summaries.
double symplecticity_defect_2norm(const Matrix& m);

/// det((P^T A^T J A P)_{[2j, 2j]}) for j = pairs, by pivoted elimination on
/// the extracted block. Serves as the brute-force side of the minor identity.
double even_leading_minor(const Matrix& a, std::size_t pairs);

}  // namespace srkit
