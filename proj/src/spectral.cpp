#include "abc/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace abc {

std::string to_string(Hyperbolicity v) {
  switch (v) {
    case Hyperbolicity::hyperbolic: return "hyperbolic";
    case Hyperbolicity::has_unit_modulus: return "has_unit_modulus";
    case Hyperbolicity::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

HyperbolicityReport check_hyperbolic(const IntegerMatrix& A, double delta) {
  if (delta <= 0) throw std::invalid_argument("delta must be > 0");
  Eigen::MatrixXd Ar = A.to_real();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(Ar, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue solver failed to converge");

  HyperbolicityReport rep;
  rep.tolerance = delta;
  for (Eigen::Index i = 0; i < Ar.rows(); ++i)
    rep.eigen_moduli.push_back(std::abs(solver.eigenvalues()[i]));
  std::sort(rep.eigen_moduli.begin(), rep.eigen_moduli.end(), std::greater<>());

  rep.gap = std::numeric_limits<double>::infinity();
  for (double m : rep.eigen_moduli) rep.gap = std::min(rep.gap, std::abs(m - 1.0));

  const double machine = 1e-12 * std::max(1.0, Ar.cwiseAbs().rowwise().sum().maxCoeff());
  if (rep.gap > delta)
    rep.verdict = Hyperbolicity::hyperbolic;
  else if (rep.gap <= machine)
    rep.verdict = Hyperbolicity::has_unit_modulus;
  else
    rep.verdict = Hyperbolicity::indeterminate;
  return rep;
}

void ordered_complex_schur(const Eigen::MatrixXd& A,
                           const std::vector<bool>& select_top,
                           Eigen::MatrixXcd& T, Eigen::MatrixXcd& Q) {
  using Complex = std::complex<double>;
  const Eigen::Index n = A.rows();
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(A.cast<Complex>());
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("complex Schur decomposition failed");
  T = schur.matrixT();
  Q = schur.matrixU();

  std::vector<bool> sel(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    sel[static_cast<std::size_t>(i)] = select_top[static_cast<std::size_t>(i)];

  // Bubble selected diagonal entries to the top-left with unitary swaps of
  // adjacent entries (ztrexc-style): the rotation whose first column is the
  // eigenvector [T(p,p+1), T(p+1,p+1) - T(p,p)] of the trailing eigenvalue.
  bool moved = true;
  while (moved) {
    moved = false;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      const auto pi = static_cast<std::size_t>(p);
      if (sel[pi] || !sel[pi + 1]) continue;
      const Complex a = T(p, p), c = T(p, p + 1), d = T(p + 1, p + 1);
      if (std::abs(c) + std::abs(d - a) > 0.0) {
        Eigen::JacobiRotation<Complex> rot;
        // makeGivens gives G with G^* [c; d-a] = [r; 0], i.e. first column of
        // G proportional to the eigenvector.
        rot.makeGivens(c, d - a);
        T.applyOnTheLeft(p, p + 1, rot.adjoint());
        T.applyOnTheRight(p, p + 1, rot);
        Q.applyOnTheRight(p, p + 1, rot);
      }
      T(p + 1, p) = Complex(0, 0);
      std::swap(sel[pi], sel[pi + 1]);
      moved = true;
    }
  }
}

namespace {

// Orthonormal real basis of the real invariant subspace spanned (over C) by
// the given complex columns. rank is known a priori.
Eigen::MatrixXd real_basis(const Eigen::MatrixXcd& cols, Eigen::Index rank) {
  if (rank == 0) return Eigen::MatrixXd(cols.rows(), 0);
  Eigen::MatrixXd stacked(cols.rows(), 2 * cols.cols());
  stacked << cols.real(), cols.imag();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeThinU);
  return svd.matrixU().leftCols(rank);
}

}  // namespace

Splitting compute_splitting(const IntegerMatrix& A, double delta) {
  HyperbolicityReport rep = check_hyperbolic(A, delta);
  if (rep.verdict != Hyperbolicity::hyperbolic)
    throw std::domain_error("compute_splitting requires a hyperbolic matrix (got " +
                            to_string(rep.verdict) + ")");

  Eigen::MatrixXd Ar = A.to_real();
  const Eigen::Index n = Ar.rows();

  Eigen::ComplexSchur<Eigen::MatrixXcd> probe(Ar.cast<std::complex<double>>());
  std::vector<bool> unstable(static_cast<std::size_t>(n));
  Eigen::Index dim_u = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    bool u = std::abs(probe.matrixT()(i, i)) > 1.0;
    unstable[static_cast<std::size_t>(i)] = u;
    if (u) ++dim_u;
  }
  const Eigen::Index dim_s = n - dim_u;

  Eigen::MatrixXcd T, Q;
  Splitting out;
  out.dim_u = dim_u;
  out.dim_s = dim_s;

  ordered_complex_schur(Ar, unstable, T, Q);
  out.basis_u = real_basis(Q.leftCols(dim_u), dim_u);
  std::vector<bool> stable = unstable;
  stable.flip();
  ordered_complex_schur(Ar, stable, T, Q);
  out.basis_s = real_basis(Q.leftCols(dim_s), dim_s);

  // Oblique projectors from the bases: solve [U S] X = I and split the rows.
  Eigen::MatrixXd M(n, n);
  if (dim_u > 0) M.leftCols(dim_u) = out.basis_u;
  if (dim_s > 0) M.rightCols(dim_s) = out.basis_s;
  Eigen::MatrixXd X = M.partialPivLu().solve(Eigen::MatrixXd::Identity(n, n));
  out.proj_u = (dim_u > 0) ? (out.basis_u * X.topRows(dim_u)).eval()
                           : Eigen::MatrixXd::Zero(n, n).eval();
  out.proj_s = (dim_s > 0) ? (out.basis_s * X.bottomRows(dim_s)).eval()
                           : Eigen::MatrixXd::Zero(n, n).eval();
  return out;
}

double Splitting::residual_partition(const Eigen::MatrixXd& A) const {
  const Eigen::Index n = A.rows();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  double r = (proj_u + proj_s - I).norm();
  r = std::max(r, (proj_u * proj_s).norm());
  r = std::max(r, (proj_u * proj_u - proj_u).norm());
  r = std::max(r, (proj_s * proj_s - proj_s).norm());
  r = std::max(r, (A * proj_u - proj_u * A).norm());
  r = std::max(r, (A * proj_s - proj_s * A).norm());
  return r;
}

Eigen::MatrixXd restrict_to(const Eigen::MatrixXd& A, const Eigen::MatrixXd& basis) {
  return basis.transpose() * A * basis;
}

double operator_norm(const Eigen::MatrixXd& M) {
  if (M.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  return svd.singularValues()(0);
}

ExpansionConstants find_k(const IntegerMatrix& A, const Splitting& S, unsigned cap) {
  Eigen::MatrixXd Ar = A.to_real();
  Eigen::MatrixXd Cu = (S.dim_u > 0) ? restrict_to(Ar, S.basis_u) : Eigen::MatrixXd();
  Eigen::MatrixXd Cs = (S.dim_s > 0) ? restrict_to(Ar, S.basis_s) : Eigen::MatrixXd();
  Eigen::MatrixXd Cu_k = Cu, Cs_k = Cs;

  for (unsigned k = 1; k <= cap; ++k) {
    double sigma_min_u = std::numeric_limits<double>::infinity();
    double sigma_max_s = 0.0;
    if (S.dim_u > 0) {
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(Cu_k);
      sigma_min_u = svd.singularValues().minCoeff();
    }
    if (S.dim_s > 0) {
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(Cs_k);
      sigma_max_s = svd.singularValues().maxCoeff();
    }
    const bool expands = (S.dim_u == 0) || sigma_min_u > 1.0;
    const bool contracts = (S.dim_s == 0) || sigma_max_s < 1.0;
    if (expands && contracts) {
      ExpansionConstants out;
      out.k = k;
      if (S.dim_u > 0) out.theta_u = (1.0 + sigma_min_u) / 2.0;
      if (S.dim_s > 0) out.theta_s = (1.0 + sigma_max_s) / 2.0;
      return out;
    }
    if (S.dim_u > 0) Cu_k = (Cu_k * Cu).eval();
    if (S.dim_s > 0) Cs_k = (Cs_k * Cs).eval();
  }
  throw std::runtime_error(
      "find_k: no k <= " + std::to_string(cap) +
      " gives uniform expansion/contraction on the restricted subspaces; "
      "the splitting may be badly conditioned");
}

}  // namespace abc
