#include "qbell/qfi_disturbed.hpp"

#include <cmath>
#include <limits>

#include "qbell/math_detail.hpp"

namespace qbell {

namespace {

void require_eta(double eta) {
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw OutOfRange("eta must be finite and >= 0");
  }
}

// Pieces of Var(G - (eta/2) P) on the probe.  With K = G - (eta/2) P:
//   <K>   = n_in_A                      (all P means vanish for real alpha)
//   <K^2> = N^2 [ (1+l^2)(gamma1 + (eta^2/4) Y) - (1-l^2)(eta/2) w
//                 + l kappa (gamma2 + (eta^2/4) cPP) ]
// where Y = <P^2> = cosh 2r + sinh 2r cos theta on either component,
//       w = <{G,P}> = -2 alpha sinh 2r sin theta on |alpha,xi>
//       cPP = 2 Re<-a,xi|P^2|a,xi> = 2 kappa Y (1 - 4 alpha^2 Y),
// and the cross {G,P} element is identically zero.
struct DisturbedPieces {
  double n_in;
  double second_moment;  // <K^2>
};

DisturbedPieces disturbed_moments(const ProbeParams& p, double eta) {
  const ComponentParams& c = p.component;
  EnergyReport e = input_photon_number(p);
  double g1 = gamma1(c);
  double g2 = gamma2(c);
  double sh2 = std::sinh(2.0 * c.r);
  double yy = std::cosh(2.0 * c.r) + sh2 * std::cos(c.theta);
  double w = -2.0 * c.alpha * sh2 * std::sin(c.theta);
  double cpp = 2.0 * e.kappa * yy * (1.0 - 4.0 * c.alpha * c.alpha * yy);
  double l = p.l;
  double second =
      e.norm_sq * ((1.0 + l * l) * (g1 + 0.25 * eta * eta * yy) -
                   (1.0 - l * l) * 0.5 * eta * w +
                   l * e.kappa * (g2 + 0.25 * eta * eta * cpp));
  return {e.n_in_A, second};
}

}  // namespace

double gamma3(const ComponentParams& c, double eta) {
  require_eta(eta);
  detail::Hyper h(c.r);
  double s = std::sinh(c.r);
  double a2 = c.alpha * c.alpha;
  double k = overlap_kappa(c);
  return 2.0 * k *
         (eta * eta + s * s - a2 * (h.sh4 * std::cos(c.theta) + h.ch4));
}

GeneratorMoments effective_generator_moments_phi0(const ProbeParams& p,
                                                  double eta) {
  require_eta(eta);
  DisturbedPieces m = disturbed_moments(p, eta);
  double shift = eta * eta / 3.0;
  // (K + shift)^2 = K^2 + 2 shift K + shift^2
  return {m.n_in + shift,
          m.second_moment + 2.0 * shift * m.n_in + shift * shift};
}

QfiReport qfi_disturbed_phi0(const ProbeParams& p, double eta) {
  require_eta(eta);
  DisturbedPieces m = disturbed_moments(p, eta);
  double H = 4.0 * (m.second_moment - m.n_in * m.n_in);
  return {H,     gamma1(p.component), gamma2(p.component),
          m.n_in, m.n_in,             m.second_moment};
}

QfiReport qfi_disturbed_finite_phi(const ProbeParams& p,
                                   const DisturbanceParams& d,
                                   OracleOptions opts) {
  require_eta(d.eta);
  if (d.phi == 0.0) {
    throw OutOfRange("phi must be nonzero; use qfi_disturbed_phi0 for the limit");
  }
  ProbeOracle oracle(p, opts);
  const FockWorkspace& ws = oracle.workspace();
  Eigen::MatrixXcd gen = ws.average_generator(d.phi, d.eta);
  double mean = expectation_on_a(ws, oracle.state(), gen);
  double H = oracle_qfi(ws, oracle.state(), gen);
  double n_in = expectation_on_a(ws, oracle.state(), ws.number());
  double nan = std::numeric_limits<double>::quiet_NaN();
  return {H, nan, nan, n_in, mean, 0.25 * H + mean * mean};
}

OutputEnergyReport output_photon_number_phi0(const ProbeParams& p,
                                             double eta) {
  require_eta(eta);
  double k = overlap_kappa(p.component);
  double n2 = norm_sq(p);
  double g3 = gamma3(p.component, eta);
  double n0 = component_energy(p.component).n0;
  double n_out =
      n2 * ((n0 + eta * eta) * (1.0 + p.l * p.l) + p.l * k * g3);
  return {n_out, g3};
}

}  // namespace qbell
