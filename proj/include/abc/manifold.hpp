#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace abc {

enum class ManifoldKind { interval, circle };

// Compact 1-D manifold with a fixed chart and embedding.
//
// interval: chart coordinate x in [lo, hi], embedded as itself in R^1 (ell=1).
// circle:   chart coordinate x with period 1, embedded as the unit circle
//           (cos 2 pi x, sin 2 pi x) in R^2 (ell=2). Circle maps are handled
//           through period-1 lifts h with h(x+1) = h(x) + 1.
//
// Displacement vectors are embedding-space differences; the C1 metric is
// chart-based (see c1_distance_to_identity).
struct EmbeddedManifold1D {
  ManifoldKind kind = ManifoldKind::interval;
  double lo = 0.0, hi = 1.0;  // circle uses [0, 1) implicitly
  int grid_resolution = 4096;

  static EmbeddedManifold1D interval(double lo, double hi, int grid = 4096);
  static EmbeddedManifold1D circle(int grid = 4096);

  Eigen::Index ell() const { return kind == ManifoldKind::circle ? 2 : 1; }
  double chart_radius() const {
    return kind == ManifoldKind::circle ? 0.5 : (hi - lo) / 2.0;
  }

  // interval: grid_resolution points including both endpoints.
  // circle: grid_resolution points i / grid_resolution in [0, 1).
  std::vector<double> grid() const;

  Eigen::VectorXd embed(double x) const;
  bool contains(double x, double tol = 1e-9) const;

  // Euclidean distance in the embedding between two chart points.
  double point_distance(double x, double y) const;

  std::string describe() const;
};

}  // namespace abc
