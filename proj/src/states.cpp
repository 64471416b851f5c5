#include "qbell/states.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qbell/math_detail.hpp"

namespace qbell {

namespace {

constexpr double kMaxSqueezing = 20.0;
constexpr double kDegeneracyFloor = 1e-12;

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw OutOfRange(std::string(name) + " must be finite");
  }
}

}  // namespace

ComponentParams::ComponentParams(double alpha_, double r_, double theta_)
    : alpha(alpha_), r(r_), theta(detail::reduce_angle(theta_)) {
  require_finite(alpha_, "alpha");
  require_finite(r_, "r");
  require_finite(theta_, "theta");
  if (alpha < 0.0) throw OutOfRange("alpha must be >= 0");
  if (r < 0.0) throw OutOfRange("r must be >= 0");
  if (r > kMaxSqueezing) {
    throw OutOfRange("r > 20 exceeds the accurate range of cosh(8r)");
  }
}

ProbeParams::ProbeParams(ComponentParams component_, double l_)
    : component(component_), l(l_) {
  require_finite(l_, "l");
  if (l < -1.0 || l > 1.0) throw OutOfRange("l must lie in [-1, 1]");
}

double overlap_kappa(const ComponentParams& c) {
  double y = std::cosh(2 * c.r) + std::sinh(2 * c.r) * std::cos(c.theta);
  return std::exp(-2.0 * c.alpha * c.alpha * y);
}

double gamma_cross(const ComponentParams& c) {
  detail::Hyper h(c.r);
  double s = std::sinh(c.r);
  double a2 = c.alpha * c.alpha;
  double k = overlap_kappa(c);
  return 2.0 * k * (s * s - a2 * (h.sh4 * std::cos(c.theta) + h.ch4));
}

double norm_sq(const ProbeParams& p) {
  double k = overlap_kappa(p.component);
  double denom = 1.0 + p.l * (p.l + 2.0 * k * k);
  if (denom <= kDegeneracyFloor) {
    throw DegenerateProbe("probe norm vanishes (l = -1 with kappa -> 1)");
  }
  return 1.0 / denom;
}

double normalization(const ProbeParams& p) { return std::sqrt(norm_sq(p)); }

EnergyParams component_energy(const ComponentParams& c) {
  double sh = std::sinh(c.r);
  double n0 = c.alpha * c.alpha + sh * sh;
  double beta = n0 > 0.0 ? sh * sh / n0 : 0.0;
  return {n0, beta};
}

ComponentParams from_energy(const EnergyParams& e, double theta) {
  if (!(e.n0 >= 0.0)) throw OutOfRange("n0 must be >= 0");
  if (!(e.beta >= 0.0 && e.beta <= 1.0)) {
    throw OutOfRange("beta must lie in [0, 1]");
  }
  double alpha = std::sqrt((1.0 - e.beta) * e.n0);
  double r = std::asinh(std::sqrt(e.beta * e.n0));
  return {alpha, r, theta};
}

EnergyReport input_photon_number(const ProbeParams& p) {
  double k = overlap_kappa(p.component);
  double n2 = norm_sq(p);
  double g = gamma_cross(p.component);
  double n0 = component_energy(p.component).n0;
  double n_in = n2 * ((1.0 + p.l * p.l) * n0 + p.l * k * g);
  return {n_in, g, k, n2};
}

namespace {

// n_in_A as a function of n0 at fixed (beta, theta, l).  Throws
// DegenerateProbe for (beta = 1, l = -1), where alpha = 0 for every n0.
double n_in_of_n0(double n0, double beta, double theta, double l) {
  ComponentParams c = from_energy({n0, beta}, theta);
  return input_photon_number(ProbeParams(c, l)).n_in_A;
}

}  // namespace

InversionResult invert_energy(double n_in_target, double beta, double theta,
                              double l, double n0_max) {
  if (!(n_in_target > 0.0)) throw OutOfRange("n_in_target must be > 0");
  if (!(beta >= 0.0 && beta <= 1.0)) throw OutOfRange("beta must lie in [0, 1]");
  if (l < -1.0 || l > 1.0) throw OutOfRange("l must lie in [-1, 1]");

  auto f = [&](double n0) { return n_in_of_n0(n0, beta, theta, l) - n_in_target; };

  // Grow the upper bracket until the target is covered.
  double hi = std::max(2.0 * n_in_target, 1e-3);
  while (f(hi) < 0.0) {
    hi *= 2.0;
    if (hi > n0_max) {
      throw NoRoot("no n0 in [0, n0_max] reaches the requested input energy");
    }
  }

  // 64-interval scan.  At n0 = 0 the probe is the vacuum with n_in = 0 for
  // every l > -1; at l = -1 the n0 -> 0 limit of n_in is 1/2, so the value at
  // the left edge is taken from the smallest scanned point instead.
  int transitions = 0;
  double lo_bracket = 0.0, hi_bracket = hi;
  bool have_bracket = false;
  double prev_f = (l > -1.0) ? -n_in_target : f(hi / 64.0);
  double prev_x = (l > -1.0) ? 0.0 : hi / 64.0;
  int first_i = (l > -1.0) ? 1 : 2;
  for (int i = first_i; i <= 64; ++i) {
    double x = hi * static_cast<double>(i) / 64.0;
    double fx = f(x);
    if ((prev_f <= 0.0 && fx > 0.0) || (prev_f > 0.0 && fx <= 0.0)) {
      ++transitions;
      if (!have_bracket && prev_f <= 0.0) {
        lo_bracket = prev_x;
        hi_bracket = x;
        have_bracket = true;
      }
    }
    prev_f = fx;
    prev_x = x;
  }

  if (!have_bracket) {
    if (l <= -1.0) {
      // The scan may sit entirely above the target (n_in >= ~1/2 at l = -1):
      // shrink toward 0 looking for a sign change before giving up.
      double x_hi = hi / 64.0;
      double f_hi = f(x_hi);
      if (f_hi > 0.0) {
        // Shrink toward 0; the probe numerically degenerates (kappa -> 1)
        // before n0 reaches 0, which ends the search.
        double x_lo = x_hi;
        bool found = false;
        while (x_lo > 1e-13) {
          x_lo *= 0.5;
          double fx;
          try {
            fx = f(x_lo);
          } catch (const DegenerateProbe&) {
            break;
          }
          if (fx <= 0.0) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw NoRoot("input energy is bounded away from the target at l = -1");
        }
        lo_bracket = x_lo;
        hi_bracket = 2.0 * x_lo;
        have_bracket = true;
      }
    }
    if (!have_bracket) {
      throw NoRoot("no sign change found on the scan interval");
    }
  }

  // Bisection to the stated tolerance.
  double lo = lo_bracket, hib = hi_bracket;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hib);
    double fm = f(mid);
    if (fm == 0.0) {
      lo = hib = mid;
      break;
    }
    if (fm < 0.0) {
      lo = mid;
    } else {
      hib = mid;
    }
    if (hib - lo < 1e-15 * std::max(1.0, hib)) break;
  }
  double n0 = 0.5 * (lo + hib);
  double residual = std::abs(f(n0));
  if (residual > 1e-10) {
    throw NoRoot("bisection did not reach the 1e-10 energy tolerance");
  }
  return {{n0, beta}, theta, l, residual, transitions > 1};
}

}  // namespace qbell
