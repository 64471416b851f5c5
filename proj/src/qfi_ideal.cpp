#include "qbell/qfi_ideal.hpp"

#include <cmath>

#include "qbell/math_detail.hpp"

namespace qbell {

double gamma1(const ComponentParams& c) {
  detail::Hyper h(c.r);
  double a2 = c.alpha * c.alpha;
  double ct = std::cos(c.theta);
  return a2 * a2 - a2 * (1.0 + h.sh2 * ct) + 0.5 * (4.0 * a2 - 1.0) * h.ch2 +
         0.375 * h.ch4 + 0.125;
}

double gamma2(const ComponentParams& c) {
  detail::Hyper h(c.r);
  double a2 = c.alpha * c.alpha;
  double ct = std::cos(c.theta);
  double c2t = std::cos(2.0 * c.theta);
  double k = overlap_kappa(c);
  double inner = a2 * (1.0 + 2.0 * h.sh4 * h.sh4 * c2t + 3.0 * h.ch8) -
                 2.0 * (h.sh2 + 3.0 * h.sh6) * ct - 6.0 * h.ch6;
  double mid = 4.0 * a2 * (2.0 * a2 * h.ch4 + 1.0) * h.sh2 * ct - a2 - 1.0;
  return 0.25 * k *
         (2.0 * a2 * inner + 4.0 * h.ch2 * mid + (8.0 * a2 + 3.0) * h.ch4 + 1.0);
}

QfiReport qfi_ideal(const ProbeParams& p) {
  EnergyReport e = input_photon_number(p);
  double g1 = gamma1(p.component);
  double g2 = gamma2(p.component);
  double second =
      e.norm_sq * ((1.0 + p.l * p.l) * g1 + p.l * e.kappa * g2);
  double H = 4.0 * (second - e.n_in_A * e.n_in_A);
  return {H, g1, g2, e.n_in_A, e.n_in_A, second};
}

double qfi_ideal_l0(const ComponentParams& c) {
  detail::Hyper h(c.r);
  double a2 = c.alpha * c.alpha;
  return 4.0 * a2 * (h.ch2 - h.sh2 * std::cos(c.theta)) + h.ch4 - 1.0;
}

}  // namespace qbell
