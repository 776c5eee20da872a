#pragma once

#include "abc/spectral.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace abc {

enum class Provenance { computed, empirical, user_supplied };

std::string to_string(Provenance p);

struct TaggedValue {
  double value = 0.0;
  Provenance provenance = Provenance::computed;
};

// All constants of the estimate pipeline, with provenance for the three
// non-constructive thresholds (eta1, eps0, eps1). Those stay absent until an
// override or an empirical estimator fills them; eps = min of the three is
// defined only when all are present.
struct ConstantsBundle {
  Eigen::Index n = 0;    // matrix dimension / number of b-generators
  Eigen::Index ell = 0;  // embedding dimension of the manifold
  unsigned k = 0;
  std::optional<double> theta_u, theta_s;
  std::int64_t N = 0;    // N > max_i sum_j |(A^k)_ij|
  double alpha = 0.0;    // in (0, 1/2)
  double C_k = 0.0;      // (||A^k|| + alpha) / (1 - 2 alpha)
  double operator_norm_Ak = 0.0;
  double eta = 0.0;      // half its supremum bound, see compute_constants
  std::optional<TaggedValue> eta1, eps0, eps1;

  std::optional<double> eps() const;  // min{eta1, eps1, eps0} when all present

  // min over defined members of {theta_u - 1, 1 - theta_s}.
  double theta_margin() const;

  // Canonical JSON (ordered keys, every field present, absent optionals as
  // null) — also the hashing payload.
  std::string to_json() const;
  std::uint64_t hash() const;
};

struct ConstantsOverrides {
  std::optional<double> eta1, eps0, eps1;  // tagged user_supplied when set
};

// The constant pipeline: k and the thetas from find_k, then
//   N = max_i sum_j |(A^k)_ij| + 1,
//   C_k = (||A^k|| + alpha) / (1 - 2 alpha),
//   eta = min{ alpha/sqrt(n ell), theta_margin / (2 sqrt(n ell) (2 C_k + 1)) } / 2.
// Halving eta keeps 2 eta sqrt(n ell) (2 C_k + 1) < theta_margin strict.
ConstantsBundle compute_constants(const IntegerMatrix& A, const Splitting& S,
                                  Eigen::Index ell, double alpha = 0.25,
                                  const ConstantsOverrides& overrides = {},
                                  unsigned k_cap = 64);

}  // namespace abc
