#include "abc/action.hpp"

#include <cmath>
#include <stdexcept>

namespace abc {

namespace {

// prod_j g_j^{A_ij} composed right-to-left in ascending j (the g_j commute up
// to the audited commutator residual; the order is fixed for determinism).
SmoothMap relation_rhs_word(const IntegerMatrix& A, Eigen::Index i,
                            const std::vector<SmoothMap>& g) {
  SmoothMap acc;
  for (Eigen::Index j = A.dim(); j-- > 0;) {
    const Integer& e = A(i, j);
    if (e == 0) continue;
    if (abs(e) > 4096)
      throw std::invalid_argument("relation exponent too large to compose");
    acc = iterate(g[static_cast<std::size_t>(j)], static_cast<long>(e)).after(acc);
  }
  return acc;
}

}  // namespace

ActionInstance::ActionInstance(IntegerMatrix A, EmbeddedManifold1D m, SmoothMap f,
                               std::vector<SmoothMap> g, bool partial)
    : A_(std::move(A)),
      manifold_(std::move(m)),
      f_(std::move(f)),
      g_(std::move(g)),
      partial_(partial) {}

ActionInstance ActionInstance::make(IntegerMatrix A, EmbeddedManifold1D manifold,
                                    SmoothMap f, std::vector<SmoothMap> g,
                                    bool partial, Validation mode, double tol_rel) {
  if (static_cast<Eigen::Index>(g.size()) != A.dim())
    throw std::invalid_argument("need one map g_i per b-generator");

  ActionInstance act(std::move(A), std::move(manifold), std::move(f), std::move(g),
                     partial);
  ActionValidation& v = act.validation_;
  v.enforced = (mode == Validation::enforce);

  v.monotone_ok = strictly_increasing_on(act.f_, act.manifold_);
  for (const auto& gi : act.g_)
    v.monotone_ok = v.monotone_ok && strictly_increasing_on(gi, act.manifold_);

  v.deriv_fd_residual = deriv_fd_residual(act.f_, act.manifold_);
  for (const auto& gi : act.g_)
    v.deriv_fd_residual = std::max(v.deriv_fd_residual, deriv_fd_residual(gi, act.manifold_));

  const auto grid = act.manifold_.grid();
  for (Eigen::Index i = 0; i < act.A_.dim(); ++i) {
    SmoothMap lhs = act.f_.after(act.g_[static_cast<std::size_t>(i)]);
    SmoothMap rhs = relation_rhs_word(act.A_, i, act.g_).after(act.f_);
    for (double x : grid)
      v.relation_residual = std::max(v.relation_residual,
                                     act.manifold_.point_distance(lhs(x), rhs(x)));
  }
  for (std::size_t i = 0; i < act.g_.size(); ++i)
    for (std::size_t j = i + 1; j < act.g_.size(); ++j) {
      SmoothMap ab = act.g_[i].after(act.g_[j]);
      SmoothMap ba = act.g_[j].after(act.g_[i]);
      for (double x : grid)
        v.commutator_residual = std::max(v.commutator_residual,
                                         act.manifold_.point_distance(ab(x), ba(x)));
    }

  if (mode == Validation::enforce && !v.ok(tol_rel)) {
    std::string what = "action rejected:";
    if (!v.monotone_ok) what += " a generator map is not strictly increasing;";
    if (v.relation_residual > tol_rel)
      what += " relation residual " + std::to_string(v.relation_residual) +
              " exceeds tol " + std::to_string(tol_rel) + ";";
    if (v.commutator_residual > tol_rel)
      what += " commutator residual " + std::to_string(v.commutator_residual) + ";";
    if (v.deriv_fd_residual > 1e-5)
      what += " derivative/finite-difference mismatch " +
              std::to_string(v.deriv_fd_residual) + ";";
    throw std::domain_error(what);
  }
  return act;
}

Eigen::MatrixXd ActionInstance::displacement_matrix(double x) const {
  if (!manifold_.contains(x))
    throw std::domain_error("point is off the manifold: " + std::to_string(x));
  Eigen::MatrixXd D(n(), ell());
  Eigen::VectorXd base = manifold_.embed(x);
  for (Eigen::Index i = 0; i < n(); ++i)
    D.row(i) = (manifold_.embed(g_[static_cast<std::size_t>(i)](x)) - base).transpose();
  return D;
}

DisplacementMatrix displacement_matrix(const ActionInstance& act, double x) {
  return DisplacementMatrix{act.displacement_matrix(x), x};
}

std::vector<double> ActionInstance::orbit(double x0, int steps, long stride) const {
  if (stride == 0) throw std::invalid_argument("orbit stride must be non-zero");
  if (steps < 0) throw std::invalid_argument("orbit steps must be >= 0");
  if (!manifold_.contains(x0))
    throw std::domain_error("orbit start is off the manifold");
  SmoothMap step = iterate(f_, stride);
  std::vector<double> pts{x0};
  double x = x0;
  for (int i = 0; i < steps; ++i) {
    x = step(x);
    if (partial_ && !manifold_.contains(x))
      throw ChartEscapeError("orbit:" + step.name(), x);
    pts.push_back(x);
  }
  return pts;
}

bool row_column_bound_holds(const Eigen::MatrixXd& D) {
  const Eigen::Index n = D.rows(), ell = D.cols();
  double max_row_sq = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double rs = 0.0;
    for (Eigen::Index j = 0; j < ell; ++j) rs += D(i, j) * D(i, j);
    max_row_sq = std::max(max_row_sq, rs);
  }
  double max_col_sq = 0.0;
  for (Eigen::Index j = 0; j < ell; ++j) {
    double cs = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) cs += D(i, j) * D(i, j);
    max_col_sq = std::max(max_col_sq, cs);
  }
  return max_row_sq <= static_cast<double>(ell) * max_col_sq;
}

ActionInstance make_trivial_perturbed(IntegerMatrix A, EmbeddedManifold1D m,
                                      SmoothMap f) {
  if (!is_diffeomorphism(f, m))
    throw std::domain_error("f is not an orientation-preserving diffeomorphism of " +
                            m.describe());
  std::vector<SmoothMap> g(static_cast<std::size_t>(A.dim()));
  return ActionInstance::make(std::move(A), std::move(m), std::move(f), std::move(g));
}

ActionInstance make_navas_action(IntegerMatrix A, double lambda, double v,
                                 double x_max, int grid) {
  if (A.dim() != 1)
    throw std::invalid_argument("navas action is the scalar case A = [n]");
  const double n_entry = static_cast<double>(A(0, 0));
  if (n_entry < 2.0) throw std::invalid_argument("navas action requires A = [n], n >= 2");
  if (lambda <= 1.0) throw std::invalid_argument("navas action requires lambda > 1");
  if (v <= 0.0) throw std::invalid_argument("navas action requires v > 0");
  if (lambda != n_entry)
    throw std::invalid_argument(
        "navas action needs lambda equal to the matrix entry n; the relation "
        "F G F^{-1} = G^n fails otherwise");
  if (!(x_max > 0.0 && x_max < 1.0))
    throw std::invalid_argument("navas chart is [0, x_max] with 0 < x_max < 1");

  EmbeddedManifold1D m = EmbeddedManifold1D::interval(0.0, x_max, grid);
  return ActionInstance::make(std::move(A), m, make_navas_f(lambda),
                              {make_navas_g(v)});
}

ActionInstance make_affine_on_chart(IntegerMatrix A, double lambda,
                                    const std::vector<double>& shifts,
                                    double chart_lo, double chart_hi, int grid) {
  if (static_cast<Eigen::Index>(shifts.size()) != A.dim())
    throw std::invalid_argument("need one shift per b-generator");
  if (lambda <= 0.0) throw std::invalid_argument("lambda must be positive");
  if (!(chart_lo < chart_hi)) throw std::invalid_argument("chart needs lo < hi");

  // Working domain: short f-strides of the chart, padded by enough
  // translation steps to cover relation words and displacement audits.
  double vmax = 0.0;
  for (double s : shifts) vmax = std::max(vmax, std::abs(s));
  Integer max_row = 0;
  for (Eigen::Index i = 0; i < A.dim(); ++i) {
    Integer row = 0;
    for (Eigen::Index j = 0; j < A.dim(); ++j) row += abs(A(i, j));
    max_row = std::max(max_row, row);
  }
  const double N = static_cast<double>(max_row) + 1.0;
  double lo = chart_lo, hi = chart_hi;
  for (int j = 1; j <= 8; ++j) {
    double p = std::pow(lambda, j);
    lo = std::min({lo, chart_lo * p, chart_lo / p});
    hi = std::max({hi, chart_hi * p, chart_hi / p});
  }
  const double pad = (N + 1.0) * vmax + 1.0 + 0.1 * (hi - lo);
  lo -= pad;
  hi += pad;

  SmoothMap f = make_scale(lambda);
  f.with_domain(lo, hi);
  std::vector<SmoothMap> g;
  for (double s : shifts) {
    SmoothMap gi = make_translation(s);
    gi.with_domain(lo, hi);
    g.push_back(std::move(gi));
  }
  EmbeddedManifold1D m = EmbeddedManifold1D::interval(chart_lo, chart_hi, grid);
  return ActionInstance::make(std::move(A), m, std::move(f), std::move(g),
                              /*partial=*/true);
}

}  // namespace abc
