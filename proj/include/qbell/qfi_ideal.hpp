#pragma once

#include "qbell/states.hpp"

namespace qbell {

/// QFI value together with the intermediate quantities that produced it.
/// The analytic paths fill gamma1/gamma2; the Fock-oracle path fills the
/// generator moments instead (gamma1/gamma2 are NaN there).
struct QfiReport {
  double H;
  double gamma1;
  double gamma2;
  double n_in_A;
  double generator_mean;
  double generator_second_moment;
};

/// Diagonal second moment gamma1 = <alpha,xi| (a†a)^2 |alpha,xi>.
double gamma1(const ComponentParams& c);

/// Cross second moment gamma2 = 2 Re<-alpha,xi| (a†a)^2 |alpha,xi>
/// (carries a leading kappa/4 factor in closed form).
double gamma2(const ComponentParams& c);

/// QFI of the probe under the ideal phase rotation exp(-i phi a†a) on mode A:
///   H = 4 { N^2 [ (1 + l^2) gamma1 + l kappa gamma2 ] - n_in_A^2 }.
/// The generator is phi-independent, so H carries no phi argument.
QfiReport qfi_ideal(const ProbeParams& p);

/// Single-mode (l = 0) closed form,
///   H = 4 alpha^2 [cosh(2r) - sinh(2r) cos(theta)] + cosh(4r) - 1,
/// kept as an independent regression reference for qfi_ideal at l = 0.
double qfi_ideal_l0(const ComponentParams& c);

}  // namespace qbell
