#include "abc/constants.hpp"

#include "abc/numeric.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>

namespace abc {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::computed: return "computed";
    case Provenance::empirical: return "empirical";
    case Provenance::user_supplied: return "user_supplied";
  }
  return "computed";
}

std::optional<double> ConstantsBundle::eps() const {
  if (!eta1 || !eps0 || !eps1) return std::nullopt;
  return std::min({eta1->value, eps0->value, eps1->value});
}

double ConstantsBundle::theta_margin() const {
  double m = std::numeric_limits<double>::infinity();
  if (theta_u) m = std::min(m, *theta_u - 1.0);
  if (theta_s) m = std::min(m, 1.0 - *theta_s);
  return m;
}

std::string ConstantsBundle::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["ell"] = ell;
  j["k"] = k;
  j["theta_u"] = theta_u ? nlohmann::ordered_json(*theta_u) : nlohmann::ordered_json(nullptr);
  j["theta_s"] = theta_s ? nlohmann::ordered_json(*theta_s) : nlohmann::ordered_json(nullptr);
  j["N"] = N;
  j["alpha"] = alpha;
  j["operator_norm_Ak"] = operator_norm_Ak;
  j["C_k"] = C_k;
  j["eta"] = eta;
  auto tagged = [](const std::optional<TaggedValue>& t) {
    nlohmann::ordered_json o;
    o["value"] = t ? nlohmann::ordered_json(t->value) : nlohmann::ordered_json(nullptr);
    o["provenance"] = t ? to_string(t->provenance) : "absent";
    return o;
  };
  j["eta1"] = tagged(eta1);
  j["eps0"] = tagged(eps0);
  j["eps1"] = tagged(eps1);
  auto e = eps();
  j["eps"] = e ? nlohmann::ordered_json(*e) : nlohmann::ordered_json(nullptr);
  return j.dump(2);
}

std::uint64_t ConstantsBundle::hash() const { return fnv1a64(to_json()); }

ConstantsBundle compute_constants(const IntegerMatrix& A, const Splitting& S,
                                  Eigen::Index ell, double alpha,
                                  const ConstantsOverrides& overrides,
                                  unsigned k_cap) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw std::invalid_argument("alpha must lie in (0, 1/2)");
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");

  ConstantsBundle b;
  b.n = A.dim();
  b.ell = ell;
  b.alpha = alpha;

  ExpansionConstants exp = find_k(A, S, k_cap);
  b.k = exp.k;
  b.theta_u = exp.theta_u;
  b.theta_s = exp.theta_s;

  IntMatrixData Ak = A.pow(b.k);
  Integer max_row_sum = 0;
  for (Eigen::Index i = 0; i < A.dim(); ++i) {
    Integer row = 0;
    for (Eigen::Index j = 0; j < A.dim(); ++j) row += abs(Ak(i, j));
    if (row > max_row_sum) max_row_sum = row;
  }
  Integer N_exact = max_row_sum + 1;
  if (N_exact > Integer(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("N = max_i sum_j |(A^k)_ij| + 1 exceeds int64");
  b.N = static_cast<std::int64_t>(N_exact);

  Eigen::MatrixXd Ak_real(A.dim(), A.dim());
  for (Eigen::Index i = 0; i < A.dim(); ++i)
    for (Eigen::Index j = 0; j < A.dim(); ++j)
      Ak_real(i, j) = static_cast<double>(Ak(i, j));
  b.operator_norm_Ak = operator_norm(Ak_real);
  b.C_k = (b.operator_norm_Ak + alpha) / (1.0 - 2.0 * alpha);

  const double sqnl = std::sqrt(static_cast<double>(b.n) * static_cast<double>(ell));
  const double bound_alpha = alpha / sqnl;
  const double bound_theta = b.theta_margin() / (2.0 * sqnl * (2.0 * b.C_k + 1.0));
  b.eta = std::min(bound_alpha, bound_theta) / 2.0;

  if (overrides.eta1) b.eta1 = TaggedValue{*overrides.eta1, Provenance::user_supplied};
  if (overrides.eps0) b.eps0 = TaggedValue{*overrides.eps0, Provenance::user_supplied};
  if (overrides.eps1) b.eps1 = TaggedValue{*overrides.eps1, Provenance::user_supplied};
  return b;
}

}  // namespace abc
