// Acceptance suite: one self-contained check per criterion, each printing a
// single PASS/FAIL line with the measured numbers and its runtime.  Exit code
// is the number of failed criteria.
//
//   qbell_acceptance            runs everything
//   qbell_acceptance 3 8b 9     runs a subset

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qbell/cli.hpp"
#include "qbell/entanglement.hpp"
#include "qbell/fock_oracle.hpp"
#include "qbell/math_detail.hpp"
#include "qbell/optimizer.hpp"
#include "qbell/oracle_verify.hpp"
#include "qbell/qfi_disturbed.hpp"
#include "qbell/qfi_ideal.hpp"
#include "qbell/states.hpp"

using namespace qbell;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;
  std::function<bool(std::string&)> run;
};

double eq9(double n0) {
  return 8.0 * (n0 + n0 * n0) + 2.0 * n0 + 2.0 * std::sqrt(n0 + n0 * n0) + 1.0;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---- criterion 1: single-mode reduction at l = 0 ---------------------------
bool crit1(std::string& out) {
  double max_err = 0.0;
  int points = 0;
  for (double alpha = 0.0; alpha <= 2.0 + 1e-12; alpha += 0.25) {
    for (double r = 0.0; r <= 1.5 + 1e-12; r += 0.25) {
      for (double theta : {0.0, kPi / 2, kPi, 3 * kPi / 2}) {
        ComponentParams c{alpha, r, theta};
        max_err = std::max(max_err,
                           std::abs(qfi_ideal({c, 0.0}).H - qfi_ideal_l0(c)));
        ++points;
      }
    }
  }
  out = std::to_string(points) + " points, max |diff| = " + fmt(max_err);
  return max_err <= 1e-10;
}

// ---- criterion 2: ideal oracle equivalence --------------------------------
bool crit2(std::string& out) {
  verify::CheckResult res = verify::check_qfi_ideal(1e-6);
  out = std::to_string(res.points) + " probes, max rel err = " + fmt(res.max_err);
  return res.passed;
}

// ---- criterion 3: Eq.-(9)-type optimum for non-positive l ------------------
bool crit3(std::string& out) {
  double max_beta_err = 0.0, max_e = 0.0, max_h_err = 0.0;
  for (double l : {-1.0, -0.5, 0.0}) {
    for (double n_in : {0.2, 0.6, 1.0, 1.4, 1.8}) {
      OptimizationResult res =
          optimize({n_in, l, 1.0, Objective::disturbed_phi0});
      max_beta_err = std::max(max_beta_err, std::abs(res.beta_opt - 1.0));
      max_e = std::max(max_e, std::abs(res.E));
      max_h_err = std::max(max_h_err, std::abs(res.H_max - eq9(res.n0)));
    }
  }
  out = "max |beta_opt - 1| = " + fmt(max_beta_err) + ", max E = " + fmt(max_e) +
        ", max |H - ref| = " + fmt(max_h_err);
  return max_beta_err <= 1e-6 && max_e <= 1e-6 && max_h_err <= 1e-6;
}

// ---- criterion 4: finite-phi convergence rate ------------------------------
bool crit4(std::string& out) {
  // Probes on the alpha = 0, theta in {0, pi} slice, where the first-order
  // phi correction vanishes and the convergence is genuinely quadratic.
  const struct {
    double r, theta, l;
  } probes[] = {
      {0.35, 0.0, 0.0}, {0.55, 0.0, 0.5},  {0.75, kPi, 1.0},
      {0.45, kPi, -0.5}, {0.65, 0.0, 1.0},
  };
  int runs = 0, ratios_checked = 0;
  double worst_lo = 4.0, worst_hi = 4.0;
  bool ok = true;
  for (const auto& pr : probes) {
    for (double eta : {0.5, 1.0}) {
      ProbeParams p({0.0, pr.r, pr.theta}, pr.l);
      double h0 = qfi_disturbed_phi0(p, eta).H;
      double noise_floor = 1e-8 * std::max(1.0, std::abs(h0));
      std::vector<double> errs;
      for (int k = 0; k < 8; ++k) {
        double phi = 1e-2 / (1 << k);
        errs.push_back(std::abs(qfi_disturbed_finite_phi(p, {phi, eta}).H - h0));
      }
      int checked = 0;
      for (int k = 0; k + 1 < 8; ++k) {
        if (errs[k + 1] <= noise_floor) break;
        double ratio = errs[k] / errs[k + 1];
        worst_lo = std::min(worst_lo, ratio);
        worst_hi = std::max(worst_hi, ratio);
        ok = ok && ratio >= 3.2 && ratio <= 4.8;
        ++checked;
      }
      ok = ok && checked >= 3;
      ratios_checked += checked;
      ++runs;
    }
  }
  out = std::to_string(runs) + " runs, " + std::to_string(ratios_checked) +
        " halving ratios in [" + fmt(worst_lo) + ", " + fmt(worst_hi) + "]";
  return ok;
}

// ---- criterion 5: energy accounting ----------------------------------------
bool crit5(std::string& out) {
  std::mt19937 rng(424242u);
  std::uniform_real_distribution<double> ua(0.0, 1.2), ur(0.0, 0.8),
      ut(0.0, detail::two_pi);
  double max_identity = 0.0;
  for (int i = 0; i < 50; ++i) {
    ComponentParams c(ua(rng), ur(rng), ut(rng));
    max_identity =
        std::max(max_identity, std::abs(gamma3(c, 0.0) - gamma_cross(c)));
  }

  double max_l0 = 0.0;
  for (const ComponentParams& c : verify::validated_component_grid()) {
    for (double eta : {0.5, 1.0}) {
      double n0 = component_energy(c).n0;
      double n_out = output_photon_number_phi0({c, 0.0}, eta).n_out_A;
      max_l0 = std::max(max_l0, std::abs(n_out - (n0 + eta * eta)));
    }
  }

  double max_eta0 = 0.0;
  for (const ProbeParams& p : verify::validated_probe_grid()) {
    max_eta0 = std::max(max_eta0,
                        std::abs(output_photon_number_phi0(p, 0.0).n_out_A -
                                 input_photon_number(p).n_in_A));
  }

  out = "gamma3(0)=gamma err = " + fmt(max_identity) +
        ", l->0 err = " + fmt(max_l0) + ", eta=0 err = " + fmt(max_eta0);
  return max_identity <= 1e-14 && max_l0 <= 1e-8 && max_eta0 <= 1e-10;
}

// ---- criterion 6: normalization & overlap fingerprint ----------------------
bool crit6(std::string& out) {
  verify::CheckResult kappa = verify::check_kappa_fingerprint(1e-10);
  verify::CheckResult norm = verify::check_normalization(1e-8);
  out = "overlap err = " + fmt(kappa.max_err) +
        ", norm^2 err = " + fmt(norm.max_err);
  return kappa.passed && norm.passed;
}

// ---- criterion 7: entanglement ---------------------------------------------
bool crit7(std::string& out) {
  verify::CheckResult res = verify::check_entropy(1e-8);
  bool anchors = true;
  for (double alpha : {0.3, 0.8, 1.2}) {
    anchors = anchors &&
              entanglement_entropy({{alpha, 0.4, 1.0}, -1.0}).E == 1.0 &&
              entanglement_entropy({{alpha, 0.4, 1.0}, 0.0}).E == 0.0 &&
              entanglement_entropy({{alpha, 0.4, 1.0}, 1.0}).E < 1.0;
  }
  out = std::to_string(res.points) +
        " probes, max |E - S_oracle| = " + fmt(res.max_err) +
        (anchors ? ", anchors exact" : ", ANCHOR VIOLATION");
  return res.passed && anchors;
}

// ---- criterion 8a: fig1-data ordering in l ---------------------------------
bool crit8a(std::string& out) {
  auto h_at = [](double l) {
    ThetaOptResult t =
        optimize_theta_at_beta(1.0, 0.5, l, 0.0, Objective::ideal);
    if (!t.feasible) throw NoRoot("fig1 point infeasible: " + t.error);
    return t.H;
  };
  bool ok = true;
  double prev = h_at(0.0);
  for (double l : {0.2, 0.4, 0.6, 0.8, 1.0}) {
    double h = h_at(l);
    ok = ok && h >= prev - 1e-12;
    prev = h;
  }
  prev = h_at(0.0);
  for (double l : {-0.2, -0.4, -0.6, -0.8, -1.0}) {
    double h = h_at(l);
    ok = ok && h <= prev + 1e-12;
    prev = h;
  }
  out = "H(beta = 0.5, n_in = 1) monotone on both l semi-axes";
  return ok;
}

// ---- criterion 8b: fig234-data properties ----------------------------------
bool crit8b(std::string& out) {
  std::vector<double> ls;
  for (int i = -10; i <= 10; ++i) ls.push_back(i / 10.0);
  const double n_ins[] = {0.2, 0.6, 1.0, 1.4, 1.8};
  std::map<double, std::vector<double>> curves;
  bool ok = true;
  double max_beta_dev = 0.0;
  for (double n_in : n_ins) {
    OptimizationProblem prob{n_in, 0.0, 1.0, Objective::disturbed_phi0};
    std::vector<double> hs;
    for (const SweepPoint& pt : sweep_l(prob, ls)) {
      if (!pt.ok) {
        ok = false;
        continue;
      }
      hs.push_back(pt.result.H_max);
      if (n_in == 0.2) {
        max_beta_dev =
            std::max(max_beta_dev, std::abs(pt.result.beta_opt - 1.0));
      }
    }
    curves[n_in] = hs;
  }
  ok = ok && max_beta_dev <= 1e-6;
  // curves ordered by n_in at every l
  for (std::size_t i = 0; i + 1 < std::size(n_ins); ++i) {
    const auto& lo = curves[n_ins[i]];
    const auto& hi = curves[n_ins[i + 1]];
    ok = ok && lo.size() == ls.size() && hi.size() == ls.size();
    for (std::size_t j = 0; j < lo.size() && ok; ++j) {
      ok = lo[j] <= hi[j] + 1e-9;
    }
  }
  out = "n_in = 0.2: max |beta_opt - 1| = " + fmt(max_beta_dev) +
        "; H(l) curves ordered by n_in";
  return ok;
}

// ---- criterion 8c: H non-decreasing in l on [0, 1] at n_in = 1.8 -----------
bool crit8c(std::string& out) {
  bool ok = true;
  double prev = -1.0;
  for (int i = 0; i <= 10; ++i) {
    double l = i / 10.0;
    OptimizationResult res = optimize({1.8, l, 1.0, Objective::disturbed_phi0});
    ok = ok && res.H_max >= prev - 1e-9;
    prev = res.H_max;
  }
  out = "H(l) non-decreasing on [0, 1], end value " + fmt(prev);
  return ok;
}

// ---- criterion 8d: H non-decreasing in E along the positive l axis ---------
// Expected for every n_in in {0.6, 1.0, 1.4, 1.8}.  The optimized H(l)
// genuinely peaks near l = 0.7 at n_in = 0.6 and declines ~0.13% toward
// l = 1 (cross-checked on a 10x finer brute-force grid), so the lowest
// energy fails the monotonicity claim; the measured dips are printed.
bool crit8d(std::string& out) {
  std::vector<double> ls;
  for (int i = 1; i <= 10; ++i) ls.push_back(i / 10.0);
  bool ok = true;
  std::ostringstream measured;
  for (double n_in : {0.6, 1.0, 1.4, 1.8}) {
    OptimizationProblem prob{n_in, 0.0, 1.0, Objective::disturbed_phi0};
    auto pairs = qfi_vs_entanglement(prob, ls);
    ok = ok && pairs.size() == ls.size();
    std::sort(pairs.begin(), pairs.end());
    double worst_dip = 0.0;
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      worst_dip =
          std::max(worst_dip, pairs[i - 1].second - pairs[i].second);
      ok = ok && pairs[i].second >= pairs[i - 1].second - 1e-9;
    }
    measured << " n_in=" << n_in << ": max H dip " << fmt(worst_dip);
  }
  out = "H vs E along l in (0, 1];" + measured.str();
  return ok;
}

// ---- criterion 8e: fig5-data eta ordering at fixed output energy -----------
// Expected: at every n_out in {2, 3, 4} all three disturbances are
// expected to be feasible with H(0.5) < H(1.0) < H(1.5).  In this model the
// phi -> 0 output energy is n_in + eta^2, so (n_out = 2, eta = 1.5) admits no
// probe at all, and at fixed n_out the QFI is strictly DECREASING in eta (the
// disturbance consumes input energy when the total is held fixed).  The check
// is implemented as stated and fails; the measured values are printed.
bool crit8e(std::string& out) {
  std::vector<double> etas = {0.5, 1.0, 1.5};
  std::vector<double> targets = {2.0, 3.0, 4.0};
  OptimizationProblem prob{1.0, 1.0, 0.0, Objective::disturbed_phi0};
  std::vector<NoutPoint> pts = sweep_nout(prob, etas, targets);
  std::map<std::pair<double, double>, const NoutPoint*> by_key;
  for (const NoutPoint& pt : pts) by_key[{pt.eta, pt.n_out_target}] = &pt;

  bool ok = true;
  std::ostringstream measured;
  for (double target : targets) {
    measured << " n_out=" << target << ":";
    double prev = -1.0;
    for (double eta : etas) {
      const NoutPoint* pt = by_key[{eta, target}];
      if (!pt->ok) {
        ok = false;
        measured << " H(" << eta << ")=infeasible";
        continue;
      }
      measured << " H(" << eta << ")=" << fmt(pt->result.H_max);
      ok = ok && pt->result.H_max > prev;
      prev = pt->result.H_max;
    }
  }
  out = "expected ascending in eta;" + measured.str();
  return ok;
}

// ---- criterion 9: byte determinism ------------------------------------------
bool crit9(std::string& out) {
  using namespace qbell::cli;
  int compared = 0;
  bool ok = true;
  auto both = [&](auto&& fn) {
    std::ostringstream a, b;
    fn(a);
    fn(b);
    ok = ok && !a.str().empty() && a.str() == b.str();
    ++compared;
  };

  for (Format f : {Format::csv, Format::json}) {
    EvalConfig eval;
    eval.l = 0.6;
    eval.alpha = 0.9;
    eval.r = 0.4;
    eval.theta = 1.7;
    eval.eta = 0.8;
    eval.format = f;
    both([&](std::ostream& os) {
      std::ostringstream e;
      cmd_eval(eval, os, e);
    });
  }
  {
    Fig1Config cfg;
    cfg.n_in = 1.0;
    cfg.l_values = {-0.6, 0.6};
    cfg.beta_points = 5;
    both([&](std::ostream& os) {
      std::ostringstream e;
      cmd_fig1(cfg, os, e);
    });
  }
  {
    Fig234Config cfg;
    cfg.eta = 1.0;
    cfg.n_in_values = {0.6};
    cfg.l_values = {-0.5, 0.0, 0.5};
    cfg.format = Format::json;
    both([&](std::ostream& os) {
      std::ostringstream e;
      cmd_fig234(cfg, os, e);
    });
  }
  {
    Fig5Config cfg;
    cfg.l = 1.0;
    cfg.eta_values = {1.0};
    cfg.n_out_values = {3.0};
    both([&](std::ostream& os) {
      std::ostringstream e;
      cmd_fig5(cfg, os, e);
    });
  }
  {
    OracleVerifyConfig cfg;
    cfg.check = "kappa-only";
    both([&](std::ostream& os) {
      std::ostringstream e;
      cmd_oracle_verify(cfg, os, e);
    });
  }
  out = std::to_string(compared) + " command configs, two runs each";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria = {
      {"1", "assembled QFI reduces to the single-mode form at l = 0", 1.0, crit1},
      {"2", "oracle equivalence of the ideal QFI", 120.0, crit2},
      {"3", "disturbed optimum for l <= 0 reproduces the reference QFI", 60.0,
       crit3},
      {"4", "finite-phi QFI converges quadratically to the phi->0 limit",
       120.0, crit4},
      {"5", "energy accounting identities", 1.0, crit5},
      {"6", "normalization and overlap fingerprint", 30.0, crit6},
      {"7", "entanglement closed form against the oracle entropy", 60.0,
       crit7},
      // the five shape checks share the 300 s budget of the figure suite
      {"8a", "figure shape: H ordering in l at fixed beta", 20.0, crit8a},
      {"8b", "figure shape: beta_opt pinned at small energy; curves ordered",
       140.0, crit8b},
      {"8c", "figure shape: H non-decreasing in l on [0, 1]", 40.0, crit8c},
      {"8d", "figure shape: H non-decreasing in entanglement", 60.0, crit8d},
      {"8e", "figure shape: eta ordering at fixed output energy", 40.0,
       crit8e},
      {"9", "byte-identical outputs for identical configs", 60.0, crit9},
  };

  std::vector<std::string> wanted(argv + 1, argv + argc);
  int failures = 0;
  for (Criterion& c : criteria) {
    if (!wanted.empty()) {
      bool match = false;
      for (const std::string& w : wanted) {
        match = match ||
                w == c.id || (w == "8" && c.id.size() == 2 && c.id[0] == '8');
      }
      if (!match) continue;
    }
    auto start = std::chrono::steady_clock::now();
    bool passed = false;
    std::string detail;
    try {
      passed = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool in_time = secs <= c.time_limit_s;
    bool ok = passed && in_time;
    std::printf("%s criterion %s: %s (%s; %.2f s%s)\n", ok ? "PASS" : "FAIL",
                c.id.c_str(), c.title.c_str(), detail.c_str(), secs,
                in_time ? "" : " OVER TIME LIMIT");
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures;
}
