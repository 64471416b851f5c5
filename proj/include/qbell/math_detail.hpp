#pragma once

#include <cmath>

namespace qbell::detail {

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// Reduce an angle to [0, 2*pi).
inline double reduce_angle(double theta) {
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  if (t >= two_pi) t = 0.0;  // fmod can land exactly on two_pi after the add
  return t;
}

/// Hyperbolic values of 2r, 4r, 6r, 8r shared by the closed forms.
struct Hyper {
  double ch2, sh2, ch4, sh4, ch6, sh6, ch8;

  explicit Hyper(double r)
      : ch2(std::cosh(2 * r)),
        sh2(std::sinh(2 * r)),
        ch4(std::cosh(4 * r)),
        sh4(std::sinh(4 * r)),
        ch6(std::cosh(6 * r)),
        sh6(std::sinh(6 * r)),
        ch8(std::cosh(8 * r)) {}
};

/// (1 - sin(phi)/phi), evaluated by series for small phi where the direct
/// subtraction cancels.
inline double one_minus_sinc(double phi) {
  double x = std::abs(phi);
  if (x < 0.25) {
    double p2 = phi * phi;
    // phi^2/3! - phi^4/5! + phi^6/7! - phi^8/9!
    return p2 * (1.0 / 6.0 +
                 p2 * (-1.0 / 120.0 + p2 * (1.0 / 5040.0 - p2 / 362880.0)));
  }
  return 1.0 - std::sin(phi) / phi;
}

/// (cos(phi) - 1), series for small phi.
inline double cos_minus_one(double phi) {
  double x = std::abs(phi);
  if (x < 0.25) {
    double p2 = phi * phi;
    // -phi^2/2! + phi^4/4! - phi^6/6! + phi^8/8!
    return p2 * (-0.5 + p2 * (1.0 / 24.0 + p2 * (-1.0 / 720.0 + p2 / 40320.0)));
  }
  return std::cos(phi) - 1.0;
}

/// Binary entropy h2(x) = -x log2 x - (1-x) log2(1-x), 0 at the endpoints.
inline double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

}  // namespace qbell::detail
