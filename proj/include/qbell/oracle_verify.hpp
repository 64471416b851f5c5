#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbell/states.hpp"

namespace qbell::verify {

/// Outcome of one analytic-vs-oracle check over a parameter grid.
struct CheckResult {
  std::string name;
  int points = 0;
  double max_err = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

/// Component grid covering alpha <= 1.2, r <= 0.8, theta in {0, pi/2, pi}.
std::vector<ComponentParams> validated_component_grid();

/// Probe grid: the component grid crossed with l in {-1, -0.5, 0, 0.5, 1},
/// with the degenerate (alpha = 0, l = -1) combinations removed.
std::vector<ProbeParams> validated_probe_grid();

/// Convention fingerprint: oracle overlap and the displacement identity
/// <0|D(2a cosh r + 2a e^{i theta} sinh r)|0> must both reproduce kappa.
/// This check gates every other oracle verdict.
CheckResult check_kappa_fingerprint(double tol = 1e-10);

/// Pre-normalization probe norm^2 against the closed-form 1/N^2.
CheckResult check_normalization(double tol = 1e-8);

/// Closed-form n_in_A against the oracle expectation, and the phi -> 0
/// output energy against the oracle operator n - eta P + eta^2.
CheckResult check_energies(double tol = 1e-8);

/// Ideal QFI closed form against 4 Var(a†a); relative tolerance.
CheckResult check_qfi_ideal(double tol = 1e-6);

/// phi -> 0 disturbed QFI closed form against 4 Var(G - (eta/2) P).
CheckResult check_qfi_disturbed(double tol = 1e-6);

/// Closed-form entanglement entropy against the reduced-state entropy.
CheckResult check_entropy(double tol = 1e-8);

/// gamma2 / gamma3 closed forms against oracle cross elements, and the
/// symbolic identity gamma3(eta = 0) = gamma at seeded random points.
CheckResult check_gamma_elements(double tol = 1e-8);

/// Doubling the truncation dimension changes oracle quantities by < tol.
CheckResult check_truncation_convergence(double tol = 1e-10);

/// Run the named check ("all" for every check; "kappa-only" is an alias for
/// the fingerprint check).  tol_override replaces each check's default
/// tolerance when set.  Unknown names throw OutOfRange.
std::vector<CheckResult> run_checks(std::string_view which,
                                    std::optional<double> tol_override);

}  // namespace qbell::verify
