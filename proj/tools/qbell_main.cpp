#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qbell/cli.hpp"

namespace {

using qbell::cli::Format;

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw CLI::ValidationError("--format must be csv or json");
}

// Runs a command with stdout redirected to --out when given.
template <typename Fn>
int with_output(const std::string& out_path, Fn&& fn) {
  if (out_path.empty()) {
    return fn(std::cout);
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "{\"error\":{\"type\":\"Io\",\"message\":\"cannot open output file\"}}\n";
    return qbell::cli::kExitUsage;
  }
  return fn(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Fisher information for squeezed quasi-Bell probe states"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  std::string out_path;
  app.add_option("--format", format, "Output format: csv or json")
      ->capture_default_str();
  app.add_option("--out", out_path, "Output path (default: stdout)");

  // ---- eval ----
  qbell::cli::EvalConfig eval_cfg;
  double eval_alpha = 0.0, eval_r = 0.0, eval_theta = 0.0, eval_n0 = 0.0,
         eval_beta = 0.0;
  auto* eval = app.add_subcommand("eval", "Evaluate one probe state");
  eval->add_option("--l", eval_cfg.l, "Interpolation parameter in [-1, 1]");
  auto* oa = eval->add_option("--alpha", eval_alpha, "Displacement amplitude");
  auto* orr = eval->add_option("--r", eval_r, "Squeezing magnitude");
  auto* ot = eval->add_option("--theta", eval_theta, "Squeezing angle (rad)");
  auto* on0 = eval->add_option("--n0", eval_n0, "Component mean photon number");
  auto* ob = eval->add_option("--beta", eval_beta, "Squeezing fraction in [0, 1]");
  eval->add_flag("--theta-opt", eval_cfg.theta_opt,
                 "Optimize theta at fixed (n0, beta)");
  eval->add_option("--eta", eval_cfg.eta, "Disturbance strength (0 = ideal)");

  // ---- fig1 ----
  qbell::cli::Fig1Config fig1_cfg;
  auto* fig1 = app.add_subcommand(
      "fig1", "H(beta; l) at fixed input energy, theta optimal");
  fig1->add_option("--n-in", fig1_cfg.n_in, "Mode-A input photon number")
      ->capture_default_str();
  fig1->add_option("--l-values", fig1_cfg.l_values, "l grid");
  fig1->add_option("--beta-points", fig1_cfg.beta_points,
                   "Number of beta grid points")
      ->capture_default_str();

  // ---- fig234 ----
  qbell::cli::Fig234Config fig234_cfg;
  auto* fig234 = app.add_subcommand(
      "fig234", "Optimal beta/theta, H(l), E(l) sweeps at fixed energies");
  fig234->add_option("--eta", fig234_cfg.eta, "Disturbance strength")
      ->capture_default_str();
  fig234->add_option("--n-in-values", fig234_cfg.n_in_values,
                     "Input photon numbers");
  fig234->add_option("--l-values", fig234_cfg.l_values,
                     "l grid (default: 21 points on [-1, 1])");

  // ---- fig5 ----
  qbell::cli::Fig5Config fig5_cfg;
  auto* fig5 = app.add_subcommand(
      "fig5", "H versus mode-A output energy for several disturbances");
  fig5->add_option("--l", fig5_cfg.l, "Interpolation parameter")
      ->capture_default_str();
  fig5->add_option("--eta-values", fig5_cfg.eta_values, "Disturbance strengths");
  fig5->add_option("--n-out-values", fig5_cfg.n_out_values,
                   "Output photon number targets");

  // ---- oracle-verify ----
  qbell::cli::OracleVerifyConfig verify_cfg;
  double verify_tol = 0.0;
  auto* verify = app.add_subcommand(
      "oracle-verify", "Check every closed form against the Fock oracle");
  verify->add_option("--check", verify_cfg.check,
                     "all, kappa (kappa-only), norm, energy, qfi-ideal, "
                     "qfi-disturbed, entropy, gamma, convergence")
      ->capture_default_str();
  auto* otol = verify->add_option("--tol", verify_tol,
                                  "Tolerance override for all selected checks");

  CLI11_PARSE(app, argc, argv);

  qbell::cli::Format fmt;
  try {
    fmt = parse_format(format);
  } catch (const CLI::Error& e) {
    std::cerr << "{\"error\":{\"type\":\"Usage\",\"message\":\"" << e.what()
              << "\"}}\n";
    return qbell::cli::kExitUsage;
  }

  if (eval->parsed()) {
    if (oa->count()) eval_cfg.alpha = eval_alpha;
    if (orr->count()) eval_cfg.r = eval_r;
    if (ot->count()) eval_cfg.theta = eval_theta;
    if (on0->count()) eval_cfg.n0 = eval_n0;
    if (ob->count()) eval_cfg.beta = eval_beta;
    eval_cfg.format = fmt;
    return with_output(out_path, [&](std::ostream& os) {
      return qbell::cli::cmd_eval(eval_cfg, os, std::cerr);
    });
  }
  if (fig1->parsed()) {
    fig1_cfg.format = fmt;
    return with_output(out_path, [&](std::ostream& os) {
      return qbell::cli::cmd_fig1(fig1_cfg, os, std::cerr);
    });
  }
  if (fig234->parsed()) {
    fig234_cfg.format = fmt;
    return with_output(out_path, [&](std::ostream& os) {
      return qbell::cli::cmd_fig234(fig234_cfg, os, std::cerr);
    });
  }
  if (fig5->parsed()) {
    fig5_cfg.format = fmt;
    return with_output(out_path, [&](std::ostream& os) {
      return qbell::cli::cmd_fig5(fig5_cfg, os, std::cerr);
    });
  }
  if (verify->parsed()) {
    if (otol->count()) verify_cfg.tol = verify_tol;
    verify_cfg.format = fmt;
    return with_output(out_path, [&](std::ostream& os) {
      return qbell::cli::cmd_oracle_verify(verify_cfg, os, std::cerr);
    });
  }
  return qbell::cli::kExitUsage;
}
