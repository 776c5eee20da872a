#pragma once

#include "abc/integer_matrix.hpp"
#include "abc/manifold.hpp"
#include "abc/smooth_map.hpp"

#include <vector>

namespace abc {

enum class Validation { enforce, record };

struct ActionValidation {
  double relation_residual = 0.0;    // max_i sup_x |(f.g_i)(x) - (prod_j g_j^{A_ij}.f)(x)|
  double commutator_residual = 0.0;  // max_{i<j} sup_x |g_i g_j (x) - g_j g_i (x)|
  double deriv_fd_residual = 0.0;
  bool monotone_ok = true;
  bool enforced = true;

  bool ok(double tol_rel, double tol_fd = 1e-5) const {
    return monotone_ok && relation_residual <= tol_rel &&
           commutator_residual <= tol_rel && deriv_fd_residual <= tol_fd;
  }
};

// A representation of Gamma_A on a 1-D manifold: f = image of a, g_i = images
// of the b_i. Construction measures the defining-relation residuals on the
// grid (the relation f g_i f^{-1} = prod_j g_j^{A_ij} is checked in the
// inverse-free form f g_i = prod_j g_j^{A_ij} f) and either enforces them
// (throws) or records them for broken-fixture runs.
class ActionInstance {
 public:
  static ActionInstance make(IntegerMatrix A, EmbeddedManifold1D manifold,
                             SmoothMap f, std::vector<SmoothMap> g,
                             bool partial = false,
                             Validation mode = Validation::enforce,
                             double tol_rel = 1e-8);

  const IntegerMatrix& matrix() const { return A_; }
  const EmbeddedManifold1D& manifold() const { return manifold_; }
  const SmoothMap& f() const { return f_; }
  const std::vector<SmoothMap>& g() const { return g_; }
  Eigen::Index n() const { return A_.dim(); }
  Eigen::Index ell() const { return manifold_.ell(); }
  bool partial() const { return partial_; }
  const ActionValidation& validation() const { return validation_; }

  // n x ell displacement rows g_i(x) - x in embedding coordinates.
  Eigen::MatrixXd displacement_matrix(double x) const;

  // [x0, f^stride(x0), f^{2 stride}(x0), ...], steps additional points.
  // Negative stride walks the inverse; every iterate must stay on the
  // manifold for partial actions.
  std::vector<double> orbit(double x0, int steps, long stride) const;

 private:
  ActionInstance(IntegerMatrix A, EmbeddedManifold1D m, SmoothMap f,
                 std::vector<SmoothMap> g, bool partial);

  IntegerMatrix A_;
  EmbeddedManifold1D manifold_;
  SmoothMap f_;
  std::vector<SmoothMap> g_;
  bool partial_ = false;
  ActionValidation validation_;
};

struct DisplacementMatrix {
  Eigen::MatrixXd entries;  // n x ell
  double base_point = 0.0;
};

DisplacementMatrix displacement_matrix(const ActionInstance& act, double x);

// max_i ||row_i||^2 <= ell * max_j ||col_j||^2, compared in squared form so
// rounding cannot flip the sign (the squared column sums dominate each of
// their rounded terms).
bool row_column_bound_holds(const Eigen::MatrixXd& D);

// rho(a) = f, rho(b_i) = id: a valid action for any diffeomorphism f of m.
ActionInstance make_trivial_perturbed(IntegerMatrix A, EmbeddedManifold1D m,
                                      SmoothMap f);

// The conjugated affine action on [0, x_max]: F(x) = x/(1 + x ln lambda),
// G(x) = 1/ln(e^{1/x} + v), fixing 0 with F'(0) = G'(0) = 1. Scalar A = [n]
// with lambda = n (the relation F G F^{-1} = G^n needs it).
ActionInstance make_navas_action(IntegerMatrix A, double lambda, double v,
                                 double x_max, int grid = 4096);

// Standard affine representation f(x) = lambda x, g_i(x) = x + shift_i on a
// chart interval; flagged partial (the maps do not preserve the chart). The
// working domain is sized so relation words, displacement evaluations and
// short f-strides stay inside; anything longer fails loudly.
ActionInstance make_affine_on_chart(IntegerMatrix A, double lambda,
                                    const std::vector<double>& shifts,
                                    double chart_lo, double chart_hi,
                                    int grid = 4096);

}  // namespace abc
