#include "qbell/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "qbell/entanglement.hpp"
#include "qbell/math_detail.hpp"
#include "qbell/parallel.hpp"
#include "qbell/qfi_disturbed.hpp"
#include "qbell/qfi_ideal.hpp"

namespace qbell {

namespace {

constexpr int kBetaGrid = 129;   // beta in {0, 1/128, ..., 1}
constexpr int kThetaGrid = 256;  // uniform on [0, 2*pi)
constexpr double kTieTol = 1e-12;
constexpr double kMoveTol = 1e-10;

struct PointEval {
  double H;
  double n0;
  bool multiple_roots;
};

double objective_of_probe(const ProbeParams& probe, const OptimizationProblem& prob) {
  return prob.objective == Objective::ideal
             ? qfi_ideal(probe).H
             : qfi_disturbed_phi0(probe, prob.eta).H;
}

// The beta = 1 column: alpha = 0 makes both branches the same component
// state, so the probe is the product state with n_in = n0 for every l (taken
// as the continuation at l = -1, where the superposition itself vanishes).
PointEval eval_product_column(const OptimizationProblem& prob, double theta) {
  double n0 = prob.n_in_target;
  ComponentParams c = from_energy({n0, 1.0}, theta);
  ProbeParams probe(c, 0.0);
  return {objective_of_probe(probe, prob), n0, false};
}

std::optional<PointEval> eval_point(const OptimizationProblem& prob,
                                    double beta, double theta) {
  if (beta >= 1.0) return eval_product_column(prob, theta);
  try {
    InversionResult inv = invert_energy(prob.n_in_target, beta, theta, prob.l);
    ComponentParams c = from_energy(inv.energy, theta);
    ProbeParams probe(c, prob.l);
    return PointEval{objective_of_probe(probe, prob), inv.energy.n0,
                     inv.multiple_roots};
  } catch (const NoRoot&) {
    return std::nullopt;
  } catch (const DegenerateProbe&) {
    return std::nullopt;
  }
}

// Golden-section maximum on [lo, hi].  The incumbent x0 and both endpoints
// are evaluated explicitly, so the result never falls below the incumbent and
// a boundary maximum (including the discontinuous one at beta = 1 for l = -1)
// is found.  Infeasible evaluations count as -inf.
double golden_max(const OptimizationProblem& prob, bool vary_beta,
                  double fixed_other, double x0, double lo, double hi,
                  double* best_f) {
  constexpr double invphi = 0.6180339887498948482;
  auto value = [&](double x) {
    double beta = vary_beta ? x : fixed_other;
    double theta = vary_beta ? fixed_other : x;
    auto ev = eval_point(prob, beta, theta);
    return ev ? ev->H : -std::numeric_limits<double>::infinity();
  };

  double best_x = x0, fb = value(x0);
  for (double x : {lo, hi}) {
    double fx = value(x);
    if (fx > fb) {
      best_x = x;
      fb = fx;
    }
  }
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = value(c), fd = value(d);
  while (b - a > 1e-12) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = value(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = value(d);
    }
    if (fc > fb) {
      best_x = c;
      fb = fc;
    }
    if (fd > fb) {
      best_x = d;
      fb = fd;
    }
  }
  if (best_f) *best_f = fb;
  return best_x;
}

}  // namespace

OptimizationResult optimize(const OptimizationProblem& prob) {
  return optimize(prob, kBetaGrid, kThetaGrid);
}

OptimizationResult optimize(const OptimizationProblem& prob,
                            int beta_grid_points, int theta_grid_points) {
  if (!(prob.n_in_target > 0.0)) throw OutOfRange("n_in_target must be > 0");
  if (prob.l < -1.0 || prob.l > 1.0) throw OutOfRange("l must lie in [-1, 1]");
  if (!(prob.eta >= 0.0)) throw OutOfRange("eta must be >= 0");
  if (beta_grid_points < 2 || theta_grid_points < 2) {
    throw OutOfRange("grid must have at least 2 points per axis");
  }

  const std::size_t total =
      static_cast<std::size_t>(beta_grid_points) * theta_grid_points;
  std::vector<std::optional<PointEval>> grid(total);
  parallel_for(total, [&](std::size_t idx) {
    int i = static_cast<int>(idx) / theta_grid_points;
    int j = static_cast<int>(idx) % theta_grid_points;
    double beta = static_cast<double>(i) / (beta_grid_points - 1);
    double theta = detail::two_pi * static_cast<double>(j) / theta_grid_points;
    grid[idx] = eval_point(prob, beta, theta);
  });

  OptimizationTrace trace;
  trace.beta_grid_points = beta_grid_points;
  trace.theta_grid_points = theta_grid_points;

  // Deterministic argmax: scan in (beta asc, theta asc) order and replace the
  // incumbent only on an improvement beyond the tie tolerance, so the
  // smallest beta (then theta) wins among ties.
  double best_h = -std::numeric_limits<double>::infinity();
  int best_i = -1, best_j = -1;
  for (int i = 0; i < beta_grid_points; ++i) {
    for (int j = 0; j < theta_grid_points; ++j) {
      const auto& ev = grid[static_cast<std::size_t>(i) * theta_grid_points + j];
      if (!ev) {
        ++trace.infeasible_points;
        continue;
      }
      ++trace.feasible_points;
      trace.multiple_roots_seen |= ev->multiple_roots;
      if (ev->H > best_h + kTieTol) {
        best_h = ev->H;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (best_i < 0) {
    throw NoRoot("every (beta, theta) grid point is infeasible for this energy");
  }

  double beta = static_cast<double>(best_i) / (beta_grid_points - 1);
  double theta = detail::two_pi * static_cast<double>(best_j) / theta_grid_points;
  double h_beta = 1.0 / (beta_grid_points - 1);
  double h_theta = detail::two_pi / theta_grid_points;

  for (int round = 0; round < 100; ++round) {
    ++trace.refinement_rounds;
    double new_beta =
        golden_max(prob, true, theta, beta, std::max(0.0, beta - h_beta),
                   std::min(1.0, beta + h_beta), nullptr);
    double new_theta = golden_max(prob, false, new_beta, theta,
                                  theta - h_theta, theta + h_theta, nullptr);
    double moved = std::max(std::abs(new_beta - beta), std::abs(new_theta - theta));
    beta = new_beta;
    theta = new_theta;
    if (moved < kMoveTol) break;
  }
  theta = detail::reduce_angle(theta);

  auto final_eval = eval_point(prob, beta, theta);
  if (!final_eval) {
    throw NoRoot("refined optimum became infeasible");  // not reachable
  }

  OptimizationResult res;
  res.beta_opt = beta;
  res.theta_opt = theta;
  res.n0 = final_eval->n0;
  res.H_max = final_eval->H;
  res.diagnostics = trace;
  if (beta >= 1.0) {
    res.E = 0.0;
    res.kappa = 1.0;
    res.n_in_A = final_eval->n0;
  } else {
    ComponentParams c = from_energy({final_eval->n0, beta}, theta);
    ProbeParams probe(c, prob.l);
    res.E = entanglement_entropy(probe).E;
    res.kappa = overlap_kappa(c);
    res.n_in_A = input_photon_number(probe).n_in_A;
  }
  return res;
}

std::vector<SweepPoint> sweep_l(const OptimizationProblem& problem_template,
                                std::span<const double> l_values) {
  std::vector<SweepPoint> points(l_values.size());
  for (std::size_t i = 0; i < l_values.size(); ++i) {
    points[i].l = l_values[i];
    OptimizationProblem prob = problem_template;
    prob.l = l_values[i];
    try {
      points[i].result = optimize(prob);
      points[i].ok = true;
    } catch (const DomainError& err) {
      points[i].error = err.what();
    }
  }
  return points;
}

std::vector<std::pair<double, double>> qfi_vs_entanglement(
    const OptimizationProblem& problem_template,
    std::span<const double> l_grid) {
  for (double l : l_grid) {
    if (!(l > 0.0)) throw OutOfRange("qfi_vs_entanglement needs l > 0");
  }
  std::vector<double> sorted(l_grid.begin(), l_grid.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(sorted.size());
  for (const SweepPoint& pt : sweep_l(problem_template, sorted)) {
    if (pt.ok) pairs.emplace_back(pt.result.E, pt.result.H_max);
  }
  return pairs;
}

std::vector<NoutPoint> sweep_nout(const OptimizationProblem& problem_template,
                                  std::span<const double> eta_values,
                                  std::span<const double> n_out_targets) {
  constexpr double kNoutTol = 1e-8;
  std::vector<NoutPoint> points;
  points.reserve(eta_values.size() * n_out_targets.size());
  for (double eta : eta_values) {
    for (double target : n_out_targets) {
      NoutPoint pt;
      pt.eta = eta;
      pt.n_out_target = target;
      OptimizationProblem prob = problem_template;
      prob.eta = eta;
      prob.objective = Objective::disturbed_phi0;
      if (target <= eta * eta) {
        pt.error = "n_out target not reachable: the disturbance alone injects eta^2";
        points.push_back(pt);
        continue;
      }
      try {
        // Bisect n_in on (0, target]: n_out(0+) = eta^2 < target and
        // n_out(target) = target + eta^2 > target.  The output energy adds
        // exactly eta^2 to the input energy, so the first probe lands on the
        // root; the loop keeps bisecting if the residual check fails.
        double lo = 0.0, hi = target;
        double n_in = target - eta * eta;
        bool done = false;
        for (int it = 0; it < 80 && !done; ++it) {
          OptimizationProblem step = prob;
          step.n_in_target = n_in;
          OptimizationResult opt = optimize(step);
          double n_out;
          if (opt.beta_opt >= 1.0) {
            n_out = opt.n0 + eta * eta;
          } else {
            ComponentParams c = from_energy({opt.n0, opt.beta_opt}, opt.theta_opt);
            n_out = output_photon_number_phi0(ProbeParams(c, prob.l), eta).n_out_A;
          }
          if (std::abs(n_out - target) <= kNoutTol) {
            pt.ok = true;
            pt.n_in = n_in;
            pt.n_out_A = n_out;
            pt.result = opt;
            done = true;
          } else if (n_out < target) {
            lo = n_in;
            n_in = 0.5 * (lo + hi);
          } else {
            hi = n_in;
            n_in = 0.5 * (lo + hi);
          }
        }
        if (!done) pt.error = "output-energy bisection did not converge";
      } catch (const DomainError& err) {
        pt.error = err.what();
      }
      points.push_back(pt);
    }
  }
  return points;
}

ThetaOptResult optimize_theta_at_beta(double n_in_target, double beta,
                                      double l, double eta,
                                      Objective objective) {
  constexpr int kThetaFine = 721;
  OptimizationProblem prob{n_in_target, l, eta, objective};
  ThetaOptResult out;

  std::vector<std::optional<PointEval>> evals(kThetaFine);
  parallel_for(kThetaFine, [&](std::size_t j) {
    double theta = detail::two_pi * static_cast<double>(j) / kThetaFine;
    evals[j] = eval_point(prob, beta, theta);
  });

  double best_h = -std::numeric_limits<double>::infinity();
  int best_j = -1;
  for (int j = 0; j < kThetaFine; ++j) {
    if (evals[j] && evals[j]->H > best_h + kTieTol) {
      best_h = evals[j]->H;
      best_j = j;
    }
  }
  if (best_j < 0) {
    out.error = "no feasible theta at this (beta, l, energy)";
    return out;
  }
  double h_theta = detail::two_pi / kThetaFine;
  double theta = detail::two_pi * static_cast<double>(best_j) / kThetaFine;
  double prev = theta;
  for (int round = 0; round < 100; ++round) {
    theta = golden_max(prob, false, beta, theta, theta - h_theta,
                       theta + h_theta, nullptr);
    if (std::abs(theta - prev) < kMoveTol) break;
    prev = theta;
  }
  theta = detail::reduce_angle(theta);
  auto ev = eval_point(prob, beta, theta);
  out.feasible = true;
  out.theta_opt = theta;
  out.H = ev->H;
  out.n0 = ev->n0;
  return out;
}

}  // namespace qbell
