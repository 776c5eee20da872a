#pragma once

#include "abc/manifold.hpp"

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

namespace abc {

// Thrown when a composition steps outside a map's working domain. Carries the
// composition trail so the offending chain is visible to the caller.
class ChartEscapeError : public std::runtime_error {
 public:
  ChartEscapeError(const std::string& composition, double x)
      : std::runtime_error("chart escape: " + composition + " at x = " +
                           std::to_string(x)),
        composition_(composition),
        point_(x) {}
  const std::string& composition() const { return composition_; }
  double point() const { return point_; }

 private:
  std::string composition_;
  double point_;
};

// Orientation-preserving C1 map in chart coordinates, with derivative.
// Interval maps carry a working domain and fail loudly outside it; circle
// maps are period-1 lifts (h(x+1) = h(x)+1) valid on all of R.
class SmoothMap {
 public:
  using Fn = std::function<double(double)>;

  SmoothMap();  // identity

  static SmoothMap from_functions(std::string name, Fn eval, Fn deriv);
  SmoothMap& with_inverse(Fn inverse);
  SmoothMap& with_domain(double lo, double hi);
  SmoothMap& mark_periodic();

  double operator()(double x) const;
  double deriv(double x) const;
  // Closed-form inverse when attached, monotone bisection + Newton polish
  // otherwise.
  double inverse_at(double y) const;

  bool periodic() const { return periodic_; }
  bool is_identity() const { return !eval_; }
  const std::string& name() const { return name_; }
  double domain_lo() const { return dom_lo_; }
  double domain_hi() const { return dom_hi_; }

  // f.after(g) = f o g (g applied first).
  SmoothMap after(const SmoothMap& g) const;
  SmoothMap inverse_map() const;

 private:
  void check_domain(double x) const;

  std::string name_ = "id";
  Fn eval_, deriv_, inverse_;
  double dom_lo_, dom_hi_;
  bool periodic_ = false;
};

inline SmoothMap compose(const SmoothMap& f, const SmoothMap& g) { return f.after(g); }

// f^k; negative k through the inverse, k = 0 the identity.
SmoothMap iterate(const SmoothMap& f, long k);

// Grid-sampled sup_x(|h(x) - x| + |h'(x) - 1|) in chart coordinates. A lower
// bound of the true sup, converging as grid_resolution grows.
double c1_distance_to_identity(const SmoothMap& h, const EmbeddedManifold1D& m);

// Grid checks used by action validation.
bool strictly_increasing_on(const SmoothMap& h, const EmbeddedManifold1D& m);
double deriv_fd_residual(const SmoothMap& h, const EmbeddedManifold1D& m,
                         double fd_step = 1e-6);
// Diffeomorphism-of-m check: monotone plus boundary fixing (interval) or
// period-1 equivariance (circle), within tol_map.
bool is_diffeomorphism(const SmoothMap& h, const EmbeddedManifold1D& m,
                       double tol_map = 1e-8);

// Shipped closed-form families.
SmoothMap make_scale(double lambda);
SmoothMap make_translation(double c);
// x + c x (1 - x) on [0,1]; diffeomorphism of [0,1] for |c| < 1.
SmoothMap make_quadratic_perturbation(double c);
// Circle lifts x + a sin(2 pi x) and x + a cos(2 pi x); require |a| < 1/(2 pi).
SmoothMap make_circle_sine(double a);
SmoothMap make_circle_cosine(double a);
// Identity outside [lo, hi], C1 bump displacement of the given height inside.
SmoothMap make_bump(double height, double lo, double hi);
// Navas interval maps on [0, inf): F(x) = x / (1 + x ln lambda) and
// G(x) = 1 / ln(e^{1/x} + v), in overflow-safe form (G(x) =
// x / (1 + x log1p(v e^{-1/x}))), both fixing 0 with derivative 1 there.
SmoothMap make_navas_f(double lambda);
SmoothMap make_navas_g(double v);

}  // namespace abc
