#pragma once

#include <compare>

#include "qbell/errors.hpp"

namespace qbell {

/// Squeezed coherent component state |alpha, xi> with xi = r e^{i theta}.
/// alpha and r are nonnegative; theta is stored reduced to [0, 2*pi).
/// Construction rejects negative or non-finite parameters and r > 20 (the
/// closed forms contain cosh(8r), which is accurate in double precision only
/// up to that point).
struct ComponentParams {
  double alpha;
  double r;
  double theta;

  ComponentParams(double alpha_, double r_, double theta_);
};

/// Two-mode probe: the component state plus the interpolation parameter
/// l in [-1, 1] weighting the swapped branch of the superposition.
struct ProbeParams {
  ComponentParams component;
  double l;

  ProbeParams(ComponentParams component_, double l_);
};

/// Energy split of a component state: mean photon number n0 and the
/// squeezing fraction beta = sinh^2(r) / n0 (0 when n0 = 0).
struct EnergyParams {
  double n0;
  double beta;
};

/// Mode-A input energy of a probe together with the quantities that enter it.
struct EnergyReport {
  double n_in_A;   ///< mean photon number in mode A
  double gamma;    ///< cross term 2 Re<-a,xi| a†a |a,xi>
  double kappa;    ///< component overlap
  double norm_sq;  ///< squared normalization factor N^2
};

/// Result of the numeric energy inversion.  multiple_roots is set when the
/// energy map was found non-monotonic on the scan and the smallest root was
/// returned.
struct InversionResult {
  EnergyParams energy;
  double theta;
  double l;
  double residual;      ///< |n_in_A(n0) - target| at the returned n0
  bool multiple_roots;
};

/// Overlap kappa = <alpha,xi|-alpha,xi>
///               = exp{-2 alpha^2 [cosh(2r) + sinh(2r) cos(theta)]}.
/// Strictly positive; equals 1 exactly when alpha = 0.
double overlap_kappa(const ComponentParams& c);

/// Cross term gamma = 2 Re<-alpha,xi| a†a |alpha,xi>
///   = 2 kappa { sinh^2(r) - alpha^2 [sinh(4r) cos(theta) + cosh(4r)] }.
double gamma_cross(const ComponentParams& c);

/// Squared normalization N^2 = 1 / (1 + l(l + 2 kappa^2)).
/// Throws DegenerateProbe when the denominator falls below the numeric floor
/// (only reachable at l = -1 with kappa -> 1).
double norm_sq(const ProbeParams& p);

/// Normalization factor N = sqrt(norm_sq).
double normalization(const ProbeParams& p);

/// n0 = alpha^2 + sinh^2(r), beta = sinh^2(r)/n0 (0 for the vacuum).
EnergyParams component_energy(const ComponentParams& c);

/// Inverse map: alpha = sqrt((1-beta) n0), r = asinh(sqrt(beta n0)).
ComponentParams from_energy(const EnergyParams& e, double theta);

/// Mode-A mean photon number of the probe,
///   n_in_A = N^2 [ (1 + l^2) n0 + l kappa gamma ].
EnergyReport input_photon_number(const ProbeParams& p);

/// Numerically invert the energy map: find n0 such that the probe built from
/// (n0, beta, theta, l) has n_in_A equal to n_in_target within 1e-10.
///
/// Bracketed bisection on n0 in [0, n0_max], with the upper bracket grown
/// geometrically from 2*n_in_target.  A 64-interval scan detects
/// non-monotonicity; when more than one sign change is present the smallest
/// root is returned and multiple_roots is set.  Deterministic.
///
/// Throws NoRoot when no n0 in [0, n0_max] reaches the target (at l = -1 the
/// input energy is bounded below by 1/2 for every beta < 1, so small targets
/// are genuinely unreachable there).  DegenerateProbe propagates for
/// (beta = 1, l = -1), where every candidate probe is degenerate.
InversionResult invert_energy(double n_in_target, double beta, double theta,
                              double l, double n0_max = 1e3);

}  // namespace qbell
