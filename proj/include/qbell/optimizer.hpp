#pragma once

#include <span>
#include <string>
#include <vector>

#include "qbell/states.hpp"

namespace qbell {

enum class Objective { ideal, disturbed_phi0 };

/// Maximize the QFI over (beta, theta) at fixed input energy and fixed l.
struct OptimizationProblem {
  double n_in_target;
  double l;
  double eta = 0.0;
  Objective objective = Objective::ideal;
};

/// Grid/refinement bookkeeping for one optimization.
struct OptimizationTrace {
  int beta_grid_points = 0;
  int theta_grid_points = 0;
  int feasible_points = 0;
  int infeasible_points = 0;
  int refinement_rounds = 0;
  bool multiple_roots_seen = false;
};

struct OptimizationResult {
  double beta_opt;
  double theta_opt;  ///< radians in [0, 2*pi)
  double n0;         ///< from the energy inversion at the optimum
  double H_max;
  double E;          ///< entanglement entropy of the optimal probe
  double kappa;
  double n_in_A;     ///< achieved input energy (equals the target within 1e-8)
  OptimizationTrace diagnostics;
};

/// Deterministic grid search (beta in {0, 1/128, ..., 1} x 256 uniform theta)
/// followed by alternating golden-section refinement on beta and theta until
/// both move by less than 1e-10.  Ties on the grid are broken toward the
/// smallest beta, then the smallest theta.
///
/// The beta = 1 boundary is evaluated as the squeezed-vacuum product state
/// for every l: at alpha = 0 the two superposition branches coincide, so the
/// probe reduces to the component state whenever it is nonzero, and the same
/// value is taken as the continuation at l = -1 where the superposition
/// vanishes.  Infeasible grid points (NoRoot / DegenerateProbe from the
/// energy inversion) are skipped; optimize fails only if every point is
/// infeasible.
OptimizationResult optimize(const OptimizationProblem& problem);

/// Same search with an explicit grid density (used for refinement-convergence
/// checks).
OptimizationResult optimize(const OptimizationProblem& problem,
                            int beta_grid_points, int theta_grid_points);

/// One l-sweep entry; failed points carry the error text instead of a result.
struct SweepPoint {
  double l = 0.0;
  bool ok = false;
  OptimizationResult result{};
  std::string error;
};

/// Independent optimizations at each l (the data behind the beta_opt(l),
/// theta_opt(l), H(l) and E(l) curves).
std::vector<SweepPoint> sweep_l(const OptimizationProblem& problem_template,
                                std::span<const double> l_values);

/// (E, H) pairs for l on the positive semi-axis, sorted by l.
/// Throws OutOfRange if the grid contains l <= 0.
std::vector<std::pair<double, double>> qfi_vs_entanglement(
    const OptimizationProblem& problem_template,
    std::span<const double> l_grid);

/// One output-energy sweep entry.
struct NoutPoint {
  double eta = 0.0;
  double n_out_target = 0.0;
  bool ok = false;
  double n_in = 0.0;       ///< input energy that meets the output target
  double n_out_A = 0.0;    ///< achieved output energy
  OptimizationResult result{};
  std::string error;
};

/// For each (eta, n_out target): find the input energy whose optimal probe
/// reaches the requested mode-A output energy, by bisecting n_in on
/// (0, n_out] with the full optimize pipeline at each step (the output energy
/// is monotone in the input energy at fixed shape policy).  Targets at or
/// below eta^2 are unreachable (the disturbance alone already injects eta^2)
/// and are recorded as failed points.
std::vector<NoutPoint> sweep_nout(const OptimizationProblem& problem_template,
                                  std::span<const double> eta_values,
                                  std::span<const double> n_out_targets);

/// Theta-only optimization at fixed beta: argmax over a 721-point uniform
/// theta grid on [0, 2*pi) refined by golden section to 1e-10.
struct ThetaOptResult {
  bool feasible = false;
  double theta_opt = 0.0;
  double H = 0.0;
  double n0 = 0.0;
  std::string error;
};

ThetaOptResult optimize_theta_at_beta(double n_in_target, double beta,
                                      double l, double eta,
                                      Objective objective);

}  // namespace qbell
