#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qbell/optimizer.hpp"

namespace qbell::cli {

/// Cell value; monostate renders as an empty CSV cell / JSON null.
using Value = std::variant<std::monostate, double, long long, std::string, bool>;

/// One self-describing output row (ordered name/value pairs).
struct Row {
  std::vector<std::pair<std::string, Value>> cols;

  void add(std::string name, Value v) {
    cols.emplace_back(std::move(name), std::move(v));
  }
};

enum class Format { csv, json };

/// Shortest decimal that round-trips the 64-bit value.
std::string format_double(double v);

/// CSV with a header row taken from the first row's column names.
void write_csv(const std::vector<Row>& rows, std::ostream& out);

/// {"config": {...}, "rows": [...]} with insertion order preserved.
void write_json(const std::vector<std::pair<std::string, Value>>& config_echo,
                const std::vector<Row>& rows, std::ostream& out);

/// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Single-point evaluation.  The probe is given either as (alpha, r, theta)
/// or as (n0, beta) with theta fixed or optimized; eta > 0 switches the QFI
/// to the disturbed phi -> 0 objective and adds the output energy column.
struct EvalConfig {
  double l = 0.0;
  std::optional<double> alpha, r, theta;
  std::optional<double> n0, beta;
  bool theta_opt = false;
  double eta = 0.0;
  Format format = Format::csv;
};

/// H(beta; l) at fixed input energy with the optimal squeezing angle,
/// including the n0(beta; l) data.
struct Fig1Config {
  double n_in = 1.0;
  std::vector<double> l_values = {-1.0, -0.8, -0.6, -0.4, -0.2, 0.0,
                                  0.2,  0.4,  0.6,  0.8,  1.0};
  int beta_points = 41;
  Format format = Format::csv;
};

/// Optimization sweeps over l for several input energies (the data behind
/// the beta_opt/theta_opt/H curves, the E(l) curves and the (E, H) pairs).
struct Fig234Config {
  double eta = 1.0;
  std::vector<double> n_in_values = {0.2, 0.6, 1.0, 1.4, 1.8};
  std::vector<double> l_values;  // default: 21 points on [-1, 1]
  Format format = Format::csv;
};

/// H versus the mode-A output energy at fixed l for several disturbance
/// strengths.
struct Fig5Config {
  double l = 1.0;
  std::vector<double> eta_values = {0.5, 1.0, 1.5};
  std::vector<double> n_out_values = {2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0};
  Format format = Format::csv;
};

/// Analytic-vs-oracle verification over the validated grid.
struct OracleVerifyConfig {
  std::string check = "all";
  std::optional<double> tol;
  Format format = Format::csv;
};

int cmd_eval(const EvalConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_fig1(const Fig1Config& cfg, std::ostream& out, std::ostream& err);
int cmd_fig234(const Fig234Config& cfg, std::ostream& out, std::ostream& err);
int cmd_fig5(const Fig5Config& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle_verify(const OracleVerifyConfig& cfg, std::ostream& out,
                      std::ostream& err);

}  // namespace qbell::cli
