#include "qbell/entanglement.hpp"

#include <cmath>

#include "qbell/math_detail.hpp"

namespace qbell {

double concurrence(const ProbeParams& p) {
  double k = overlap_kappa(p.component);
  double denom = 1.0 + p.l * (p.l + 2.0 * k * k);
  if (denom <= 1e-12) {
    throw DegenerateProbe("probe norm vanishes (l = -1 with kappa -> 1)");
  }
  // The endpoints reduce algebraically; evaluating the reduced forms keeps
  // C(l = -1) = 1 exact instead of 1 +/- 1 ulp.
  if (p.l == -1.0) return 1.0;
  if (p.l == 1.0) return (1.0 - k * k) / (1.0 + k * k);
  double c = 2.0 * std::abs(p.l) * (1.0 - k * k) / denom;
  return std::min(c, 1.0);
}

EntanglementResult entanglement_entropy(const ProbeParams& p) {
  double c = concurrence(p);
  double e = detail::binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
  return {c, e, overlap_kappa(p.component)};
}

}  // namespace qbell
