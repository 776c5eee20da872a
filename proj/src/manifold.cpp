#include "abc/manifold.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace abc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

EmbeddedManifold1D EmbeddedManifold1D::interval(double lo, double hi, int grid) {
  if (!(lo < hi)) throw std::invalid_argument("interval requires lo < hi");
  if (grid < 2) throw std::invalid_argument("grid_resolution must be >= 2");
  EmbeddedManifold1D m;
  m.kind = ManifoldKind::interval;
  m.lo = lo;
  m.hi = hi;
  m.grid_resolution = grid;
  return m;
}

EmbeddedManifold1D EmbeddedManifold1D::circle(int grid) {
  if (grid < 2) throw std::invalid_argument("grid_resolution must be >= 2");
  EmbeddedManifold1D m;
  m.kind = ManifoldKind::circle;
  m.lo = 0.0;
  m.hi = 1.0;
  m.grid_resolution = grid;
  return m;
}

std::vector<double> EmbeddedManifold1D::grid() const {
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(grid_resolution));
  if (kind == ManifoldKind::interval) {
    const double step = (hi - lo) / (grid_resolution - 1);
    for (int i = 0; i < grid_resolution; ++i) pts.push_back(lo + i * step);
    pts.back() = hi;  // guard accumulated rounding at the right endpoint
  } else {
    for (int i = 0; i < grid_resolution; ++i)
      pts.push_back(static_cast<double>(i) / grid_resolution);
  }
  return pts;
}

Eigen::VectorXd EmbeddedManifold1D::embed(double x) const {
  if (kind == ManifoldKind::interval) {
    Eigen::VectorXd p(1);
    p[0] = x;
    return p;
  }
  Eigen::VectorXd p(2);
  p[0] = std::cos(kTwoPi * x);
  p[1] = std::sin(kTwoPi * x);
  return p;
}

bool EmbeddedManifold1D::contains(double x, double tol) const {
  if (kind == ManifoldKind::circle) return std::isfinite(x);
  return x >= lo - tol && x <= hi + tol;
}

double EmbeddedManifold1D::point_distance(double x, double y) const {
  if (kind == ManifoldKind::interval) return std::abs(x - y);
  return (embed(x) - embed(y)).norm();
}

std::string EmbeddedManifold1D::describe() const {
  std::ostringstream out;
  if (kind == ManifoldKind::interval)
    out << "interval[" << lo << ", " << hi << "]";
  else
    out << "circle";
  out << " grid=" << grid_resolution;
  return out.str();
}

}  // namespace abc
