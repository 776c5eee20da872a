#pragma once

#include "abc/integer_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abc {

enum class Hyperbolicity { hyperbolic, has_unit_modulus, indeterminate };

std::string to_string(Hyperbolicity v);

struct HyperbolicityReport {
  std::vector<double> eigen_moduli;  // sorted descending
  double gap = 0.0;                  // min over eigenvalues of ||lambda| - 1|
  Hyperbolicity verdict = Hyperbolicity::indeterminate;
  double tolerance = 0.0;            // the delta used
};

// Numerical unit-circle test. verdict = hyperbolic iff gap > delta;
// moduli within machine level of 1 report has_unit_modulus, the band in
// between reports indeterminate.
HyperbolicityReport check_hyperbolic(const IntegerMatrix& A, double delta = 1e-9);

// A-invariant splitting R^n = E^u + E^s by eigenvalue modulus, with oblique
// spectral projectors pi_u, pi_s (pi_u + pi_s = I, pi_u pi_s = 0, both
// commuting with A).
struct Splitting {
  Eigen::Index dim_u = 0, dim_s = 0;
  Eigen::MatrixXd basis_u, basis_s;  // orthonormal columns, n x dim
  Eigen::MatrixXd proj_u, proj_s;    // n x n

  double residual_partition(const Eigen::MatrixXd& A) const;  // max of the invariant residuals
};

// Requires check_hyperbolic verdict == hyperbolic (delta default). Residuals
// of the Splitting invariants stay within tol_split for reasonably
// conditioned input; callers can assert via residual_partition.
Splitting compute_splitting(const IntegerMatrix& A, double delta = 1e-9);

// Complex Schur form A = Q T Q^* reordered so the diagonal entries selected
// by `select_top` come first. Exposed for tests.
void ordered_complex_schur(const Eigen::MatrixXd& A,
                           const std::vector<bool>& select_top,
                           Eigen::MatrixXcd& T, Eigen::MatrixXcd& Q);

// Least k with sigma_min(A^k | E^u) > 1 and sigma_max(A^k | E^s) < 1, plus
// theta_u = (1 + sigma_min)/2 and theta_s = (1 + sigma_max)/2 so that
// ||A^k v|| > theta_u ||v|| on E^u and ||A^k v|| < theta_s ||v|| on E^s hold
// strictly. Absent theta when the corresponding subspace is trivial.
struct ExpansionConstants {
  unsigned k = 0;
  std::optional<double> theta_u, theta_s;
};

ExpansionConstants find_k(const IntegerMatrix& A, const Splitting& S,
                          unsigned cap = 64);

// Largest singular value.
double operator_norm(const Eigen::MatrixXd& M);

// Restriction of A to the span of the orthonormal columns of basis, expressed
// in that basis (valid only for invariant subspaces).
Eigen::MatrixXd restrict_to(const Eigen::MatrixXd& A, const Eigen::MatrixXd& basis);

}  // namespace abc
