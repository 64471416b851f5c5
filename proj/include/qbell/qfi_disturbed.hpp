#pragma once

#include "qbell/fock_oracle.hpp"
#include "qbell/qfi_ideal.hpp"
#include "qbell/states.hpp"

namespace qbell {

/// Parameters of the disturbed evolution exp{-i(phi G_A + eta Q_A)}.
/// phi = 0 is reserved for the analytic phi -> 0 limit and is rejected by the
/// finite-phi path.
struct DisturbanceParams {
  double phi;
  double eta;
};

/// Mode-A output energy and the disturbed cross term behind it.
struct OutputEnergyReport {
  double n_out_A;
  double gamma3;
};

/// First and second moments of the effective generator on the probe.
struct GeneratorMoments {
  double mean;
  double second_moment;
};

/// Disturbed cross term
///   gamma3 = 2 kappa { eta^2 + sinh^2 r - alpha^2 [sinh 4r cos theta + cosh 4r] }.
/// At eta = 0 this is identical to gamma_cross.
double gamma3(const ComponentParams& c, double eta);

/// Moments of the phi -> 0 effective generator G - (eta/2) P + eta^2/3 on the
/// probe.  The limit follows from the series (1 - sin phi/phi) -> phi^2/6 and
/// (cos phi - 1) -> -phi^2/2; the constant shifts the mean and cancels in the
/// variance.
GeneratorMoments effective_generator_moments_phi0(const ProbeParams& p,
                                                  double eta);

/// QFI in the phi -> 0 limit: H = 4 Var(G - (eta/2) P) on the probe.
/// Reduces to qfi_ideal at eta = 0.
QfiReport qfi_disturbed_phi0(const ProbeParams& p, double eta);

/// QFI at finite phi, computed in truncated Fock space with the full
/// finite-phi average generator (no closed form is used on this path).
QfiReport qfi_disturbed_finite_phi(const ProbeParams& p,
                                   const DisturbanceParams& d,
                                   OracleOptions opts = {});

/// Mode-A output energy in the phi -> 0 limit,
///   n_out_A = N^2 [ (n0 + eta^2)(1 + l^2) + l kappa gamma3 ],
/// which equals n_in_A + eta^2 for every probe.
OutputEnergyReport output_photon_number_phi0(const ProbeParams& p, double eta);

}  // namespace qbell
