#include "abc/smooth_map.hpp"

#include <cmath>
#include <limits>

namespace abc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

SmoothMap::SmoothMap() : dom_lo_(-kInf), dom_hi_(kInf), periodic_(true) {}

SmoothMap SmoothMap::from_functions(std::string name, Fn eval, Fn deriv) {
  SmoothMap m;
  m.name_ = std::move(name);
  m.eval_ = std::move(eval);
  m.deriv_ = std::move(deriv);
  m.periodic_ = false;
  return m;
}

SmoothMap& SmoothMap::with_inverse(Fn inverse) {
  inverse_ = std::move(inverse);
  return *this;
}

SmoothMap& SmoothMap::with_domain(double lo, double hi) {
  dom_lo_ = lo;
  dom_hi_ = hi;
  return *this;
}

SmoothMap& SmoothMap::mark_periodic() {
  periodic_ = true;
  return *this;
}

void SmoothMap::check_domain(double x) const {
  if (periodic_) return;
  if (x < dom_lo_ - 1e-12 || x > dom_hi_ + 1e-12)
    throw ChartEscapeError(name_, x);
}

double SmoothMap::operator()(double x) const {
  if (!eval_) return x;
  check_domain(x);
  return eval_(x);
}

double SmoothMap::deriv(double x) const {
  if (!deriv_) return 1.0;
  check_domain(x);
  return deriv_(x);
}

double SmoothMap::inverse_at(double y) const {
  if (!eval_) return y;
  if (inverse_) return inverse_(y);

  // Monotone bisection with a Newton polish. Periodic lifts satisfy
  // |h(x) - x| < 1, so [y - 2, y + 2] brackets; interval maps bracket on the
  // working domain.
  double lo, hi;
  if (periodic_) {
    lo = y - 2.0;
    hi = y + 2.0;
  } else {
    lo = dom_lo_;
    hi = dom_hi_;
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw std::logic_error("inverse_at needs a finite domain or a closed form: " + name_);
  }
  double flo = (*this)(std::max(lo, dom_lo_)) - y;
  double fhi = (*this)(std::min(hi, dom_hi_)) - y;
  if (flo > 0.0 || fhi < 0.0)
    throw ChartEscapeError(name_ + "^-1", y);
  for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, std::abs(y)); ++it) {
    double mid = 0.5 * (lo + hi);
    if ((*this)(mid) - y <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 2; ++it) {
    double d = deriv(x);
    if (d > 0.0) {
      double step = ((*this)(x) - y) / d;
      double xn = x - step;
      if (xn >= lo - 1e-12 && xn <= hi + 1e-12) x = xn;
    }
  }
  return x;
}

SmoothMap SmoothMap::after(const SmoothMap& g) const {
  if (is_identity()) return g;
  if (g.is_identity()) return *this;
  SmoothMap f = *this;  // value copies keep the closures alive
  SmoothMap gg = g;
  SmoothMap out;
  out.name_ = f.name_ + "." + gg.name_;
  out.eval_ = [f, gg](double x) { return f(gg(x)); };
  out.deriv_ = [f, gg](double x) {
    double gx = gg(x);
    return f.deriv(gx) * gg.deriv(x);
  };
  out.inverse_ = [f, gg](double y) { return gg.inverse_at(f.inverse_at(y)); };
  out.periodic_ = f.periodic_ && gg.periodic_;
  out.dom_lo_ = gg.dom_lo_;
  out.dom_hi_ = gg.dom_hi_;
  return out;
}

SmoothMap SmoothMap::inverse_map() const {
  if (is_identity()) return *this;
  SmoothMap f = *this;
  SmoothMap out;
  out.name_ = f.name_ + "^-1";
  out.eval_ = [f](double y) { return f.inverse_at(y); };
  out.deriv_ = [f](double y) {
    double x = f.inverse_at(y);
    return 1.0 / f.deriv(x);
  };
  out.inverse_ = [f](double x) { return f(x); };
  out.periodic_ = f.periodic_;
  // The image of the working domain bounds where the inverse may be asked.
  if (std::isfinite(f.dom_lo_) && std::isfinite(f.dom_hi_)) {
    out.dom_lo_ = f(f.dom_lo_);
    out.dom_hi_ = f(f.dom_hi_);
  } else {
    out.dom_lo_ = f.dom_lo_;
    out.dom_hi_ = f.dom_hi_;
  }
  return out;
}

SmoothMap iterate(const SmoothMap& f, long k) {
  if (k == 0) return SmoothMap();
  SmoothMap step = (k > 0) ? f : f.inverse_map();
  SmoothMap acc = step;
  for (long i = 1; i < std::abs(k); ++i) acc = acc.after(step);
  return acc;
}

double c1_distance_to_identity(const SmoothMap& h, const EmbeddedManifold1D& m) {
  double sup = 0.0;
  for (double x : m.grid())
    sup = std::max(sup, std::abs(h(x) - x) + std::abs(h.deriv(x) - 1.0));
  return sup;
}

bool strictly_increasing_on(const SmoothMap& h, const EmbeddedManifold1D& m) {
  double prev = -kInf;
  for (double x : m.grid()) {
    double hx = h(x);
    if (!(hx > prev) || !(h.deriv(x) > 0.0)) return false;
    prev = hx;
  }
  return true;
}

double deriv_fd_residual(const SmoothMap& h, const EmbeddedManifold1D& m,
                         double fd_step) {
  double worst = 0.0;
  for (double x : m.grid()) {
    double a = x - fd_step, b = x + fd_step;
    if (!m.contains(a, 0.0) || !m.contains(b, 0.0)) continue;
    if (!h.periodic() && (a < h.domain_lo() || b > h.domain_hi())) continue;
    double fd = (h(b) - h(a)) / (2.0 * fd_step);
    worst = std::max(worst, std::abs(fd - h.deriv(x)));
  }
  return worst;
}

bool is_diffeomorphism(const SmoothMap& h, const EmbeddedManifold1D& m,
                       double tol_map) {
  if (!strictly_increasing_on(h, m)) return false;
  if (m.kind == ManifoldKind::interval)
    return std::abs(h(m.lo) - m.lo) <= tol_map && std::abs(h(m.hi) - m.hi) <= tol_map;
  // Period-1 lift equivariance, sampled.
  for (double x : {0.0, 0.3, 0.7})
    if (std::abs(h(x + 1.0) - h(x) - 1.0) > tol_map) return false;
  return true;
}

SmoothMap make_scale(double lambda) {
  if (lambda <= 0.0) throw std::invalid_argument("scale factor must be positive");
  auto m = SmoothMap::from_functions(
      "scale", [lambda](double x) { return lambda * x; },
      [lambda](double) { return lambda; });
  m.with_inverse([lambda](double y) { return y / lambda; });
  return m;
}

SmoothMap make_translation(double c) {
  auto m = SmoothMap::from_functions(
      "translate", [c](double x) { return x + c; }, [](double) { return 1.0; });
  m.with_inverse([c](double y) { return y - c; });
  return m;
}

SmoothMap make_quadratic_perturbation(double c) {
  if (std::abs(c) >= 1.0)
    throw std::invalid_argument("quadratic perturbation needs |c| < 1 to stay monotone");
  auto m = SmoothMap::from_functions(
      "quadratic", [c](double x) { return x + c * x * (1.0 - x); },
      [c](double x) { return 1.0 + c * (1.0 - 2.0 * x); });
  if (c != 0.0) {
    // y = (1+c)x - c x^2; the branch through [0,1].
    m.with_inverse([c](double y) {
      double b = 1.0 + c;
      double disc = b * b - 4.0 * c * y;
      return 2.0 * y / (b + std::sqrt(disc));
    });
  }
  m.with_domain(-0.5, 1.5);
  return m;
}

SmoothMap make_circle_sine(double a) {
  if (std::abs(a) >= 1.0 / kTwoPi)
    throw std::invalid_argument("sine amplitude must be < 1/(2 pi)");
  auto m = SmoothMap::from_functions(
      "sine", [a](double x) { return x + a * std::sin(kTwoPi * x); },
      [a](double x) { return 1.0 + a * kTwoPi * std::cos(kTwoPi * x); });
  m.mark_periodic();
  return m;
}

SmoothMap make_circle_cosine(double a) {
  if (std::abs(a) >= 1.0 / kTwoPi)
    throw std::invalid_argument("cosine amplitude must be < 1/(2 pi)");
  auto m = SmoothMap::from_functions(
      "cosine", [a](double x) { return x + a * std::cos(kTwoPi * x); },
      [a](double x) { return 1.0 - a * kTwoPi * std::sin(kTwoPi * x); });
  m.mark_periodic();
  return m;
}

SmoothMap make_bump(double height, double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("bump needs lo < hi");
  const double w = hi - lo;
  // s(t) = 16 t^2 (1-t)^2 has max slope ~3.08; keep the map monotone.
  if (std::abs(height) * 3.0792 / w >= 1.0)
    throw std::invalid_argument("bump too steep to stay a diffeomorphism");
  auto m = SmoothMap::from_functions(
      "bump",
      [height, lo, hi, w](double x) {
        if (x <= lo || x >= hi) return x;
        double t = (x - lo) / w;
        double s = 16.0 * t * t * (1.0 - t) * (1.0 - t);
        return x + height * s;
      },
      [height, lo, hi, w](double x) {
        if (x <= lo || x >= hi) return 1.0;
        double t = (x - lo) / w;
        double ds = 32.0 * t * (1.0 - t) * (1.0 - 2.0 * t);
        return 1.0 + height * ds / w;
      });
  m.with_domain(-kInf, kInf);
  return m;
}

SmoothMap make_navas_f(double lambda) {
  if (lambda <= 1.0) throw std::invalid_argument("navas F requires lambda > 1");
  const double lnl = std::log(lambda);
  auto m = SmoothMap::from_functions(
      "navasF", [lnl](double x) { return x / (1.0 + x * lnl); },
      [lnl](double x) {
        double d = 1.0 + x * lnl;
        return 1.0 / (d * d);
      });
  m.with_inverse([lnl](double y) {
    if (y * lnl >= 1.0) throw ChartEscapeError("navasF^-1", y);
    return y / (1.0 - y * lnl);
  });
  m.with_domain(0.0, 1e6);
  return m;
}

SmoothMap make_navas_g(double v) {
  if (v <= 0.0) throw std::invalid_argument("navas G requires v > 0");
  // G(x) = 1/ln(e^{1/x} + v) = x / (1 + x log1p(v e^{-1/x})). Below
  // x = 1/log(DBL_MAX) the correction underflows and G(x) = x exactly, which
  // agrees with the true value to below machine epsilon.
  auto m = SmoothMap::from_functions(
      "navasG",
      [v](double x) {
        if (x <= 0.0) return 0.0;
        double w = v * std::exp(-1.0 / x);
        return x / (1.0 + x * std::log1p(w));
      },
      [v](double x) {
        if (x <= 0.0) return 1.0;
        double w = v * std::exp(-1.0 / x);
        double d = 1.0 + x * std::log1p(w);
        return (1.0 / (1.0 + w)) / (d * d);
      });
  m.with_inverse([v](double y) {
    if (y <= 0.0) return 0.0;
    double w = v * std::exp(-1.0 / y);
    if (w >= 1.0) throw ChartEscapeError("navasG^-1", y);
    return y / (1.0 + y * std::log1p(-w));
  });
  m.with_domain(0.0, 1e6);
  return m;
}

}  // namespace abc
