#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qbell/states.hpp"

namespace qbell {

/// Truncated Fock-space workspace for one mode: the annihilation operator and
/// the derived operator matrices at a fixed truncation dimension.  Immutable
/// after construction and shareable across threads.
class FockWorkspace {
 public:
  explicit FockWorkspace(int dim);

  int dim() const { return dim_; }
  const Eigen::MatrixXcd& annihilation() const { return a_; }
  const Eigen::MatrixXcd& number() const { return n_; }
  const Eigen::MatrixXcd& quadrature_q() const { return q_; }  // a + a†
  const Eigen::MatrixXcd& quadrature_p() const { return p_; }  // -i(a - a†)

  Eigen::VectorXcd vacuum() const;

  /// Displacement operator exp(amp a† - conj(amp) a) via dense matrix
  /// exponential (scaling-and-squaring with a Pade core).
  Eigen::MatrixXcd displacement(std::complex<double> amp) const;

  /// Squeeze operator exp((conj(xi) a^2 - xi a†^2)/2).
  Eigen::MatrixXcd squeeze(std::complex<double> xi) const;

  /// Average generator of exp{-i(phi a†a + eta (a + a†))} at finite phi:
  ///   G + (eta/phi^2)(phi Q + 2 eta)(1 - sin(phi)/phi)
  ///     + (eta/phi^2) P (cos(phi) - 1).
  /// phi must be nonzero; use phi0_generator for the limit.
  Eigen::MatrixXcd average_generator(double phi, double eta) const;

  /// phi -> 0 limit of the average generator: G - (eta/2) P + (eta^2/3) I.
  Eigen::MatrixXcd phi0_generator(double eta) const;

 private:
  int dim_;
  Eigen::MatrixXcd a_, n_, q_, p_;
};

/// Two-mode state in the truncated number basis, mode-A-major:
/// amplitudes[iA * dim + iB].
struct TwoModeState {
  int dim = 0;
  Eigen::VectorXcd amplitudes;
  double tail_mass = 0.0;    ///< |amplitude|^2 in the top 10% of levels of either mode
  double pre_norm_sq = 0.0;  ///< squared norm of the superposition before normalization
};

/// Component state |alpha,xi> = D(alpha) S(xi) |0> as a truncated vector.
Eigen::VectorXcd build_component(const FockWorkspace& ws,
                                 const ComponentParams& c);

/// Population in the top 10% of levels of a single-mode vector.
double single_mode_tail_mass(const Eigen::VectorXcd& v);

/// Normalized probe N(|a,xi>|-a,xi> + l |-a,xi>|a,xi>).  pre_norm_sq records
/// the squared norm before normalization (the closed-form check target is
/// 1/N^2).  Throws DegenerateProbe when the superposition vanishes.
TwoModeState build_probe(const FockWorkspace& ws, const ProbeParams& p);

/// <state| O_A (x) I |state> for a Hermitian single-mode operator O.
double expectation_on_a(const FockWorkspace& ws, const TwoModeState& state,
                        const Eigen::MatrixXcd& op);

/// 4 [ <G^2> - <G>^2 ] for a Hermitian generator acting on mode A.
double oracle_qfi(const FockWorkspace& ws, const TwoModeState& state,
                  const Eigen::MatrixXcd& generator);

/// Base-2 von Neumann entropy of the mode-A reduced density matrix.
double oracle_entropy(const FockWorkspace& ws, const TwoModeState& state);

/// Cross matrix element <-alpha,xi| O |alpha,xi> between the two component
/// states of c.
std::complex<double> oracle_cross_element(const FockWorkspace& ws,
                                          const ComponentParams& c,
                                          const Eigen::MatrixXcd& op);

/// Truncation policy: start at dim, double on tail-mass failure up to dim_max.
struct OracleOptions {
  int dim = 64;
  int dim_max = 256;
  double tail_threshold = 1e-10;
};

/// Workspace/probe pair built at a truncation dimension that satisfied the
/// tail-mass threshold.  Throws TruncationNotConverged if dim_max is reached
/// without meeting it.
class ProbeOracle {
 public:
  explicit ProbeOracle(const ProbeParams& p, OracleOptions opts = {});

  const FockWorkspace& workspace() const { return ws_; }
  const TwoModeState& state() const { return state_; }

 private:
  FockWorkspace ws_;
  TwoModeState state_;
};

}  // namespace qbell
