#include "qbell/fock_oracle.hpp"

#include <cmath>
#include <utility>

#include <unsupported/Eigen/MatrixFunctions>

#include "qbell/math_detail.hpp"

namespace qbell {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

FockWorkspace::FockWorkspace(int dim) : dim_(dim) {
  if (dim < 8) throw OutOfRange("Fock truncation dimension must be >= 8");
  a_ = Eigen::MatrixXcd::Zero(dim, dim);
  for (int m = 0; m + 1 < dim; ++m) {
    a_(m, m + 1) = std::sqrt(static_cast<double>(m + 1));
  }
  Eigen::MatrixXcd ad = a_.adjoint();
  n_ = ad * a_;
  q_ = a_ + ad;
  p_ = -kI * (a_ - ad);
}

Eigen::VectorXcd FockWorkspace::vacuum() const {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim_);
  v(0) = 1.0;
  return v;
}

Eigen::MatrixXcd FockWorkspace::displacement(std::complex<double> amp) const {
  Eigen::MatrixXcd gen = amp * a_.adjoint() - std::conj(amp) * a_;
  return gen.exp();
}

Eigen::MatrixXcd FockWorkspace::squeeze(std::complex<double> xi) const {
  Eigen::MatrixXcd gen =
      0.5 * (std::conj(xi) * (a_ * a_) - xi * (a_.adjoint() * a_.adjoint()));
  return gen.exp();
}

Eigen::MatrixXcd FockWorkspace::average_generator(double phi,
                                                  double eta) const {
  if (phi == 0.0) throw OutOfRange("phi must be nonzero at finite phi");
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim_, dim_);
  double oms = detail::one_minus_sinc(phi);
  double cm1 = detail::cos_minus_one(phi);
  return n_ + (eta / (phi * phi)) * oms * (phi * q_ + 2.0 * eta * id) +
         (eta / (phi * phi)) * cm1 * p_;
}

Eigen::MatrixXcd FockWorkspace::phi0_generator(double eta) const {
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim_, dim_);
  return n_ - 0.5 * eta * p_ + (eta * eta / 3.0) * id;
}

Eigen::VectorXcd build_component(const FockWorkspace& ws,
                                 const ComponentParams& c) {
  std::complex<double> xi = c.r * std::exp(kI * c.theta);
  Eigen::VectorXcd sv = ws.squeeze(xi) * ws.vacuum();
  return ws.displacement(c.alpha) * sv;
}

double single_mode_tail_mass(const Eigen::VectorXcd& v) {
  int dim = static_cast<int>(v.size());
  int cut = dim - std::max(1, dim / 10);
  double mass = 0.0;
  for (int m = cut; m < dim; ++m) mass += std::norm(v(m));
  return mass;
}

TwoModeState build_probe(const FockWorkspace& ws, const ProbeParams& p) {
  // The branch components differ only in the sign of alpha; reuse the
  // squeezed vacuum and the (unitary) displacement: D(-alpha) = D(alpha)†.
  std::complex<double> xi = p.component.r * std::exp(kI * p.component.theta);
  Eigen::VectorXcd sv = ws.squeeze(xi) * ws.vacuum();
  Eigen::MatrixXcd d = ws.displacement(p.component.alpha);
  Eigen::VectorXcd plus = d * sv;
  Eigen::VectorXcd minus = d.adjoint() * sv;

  int dim = ws.dim();
  Eigen::VectorXcd amp(dim * dim);
  for (int ia = 0; ia < dim; ++ia) {
    for (int ib = 0; ib < dim; ++ib) {
      amp(ia * dim + ib) = plus(ia) * minus(ib) + p.l * minus(ia) * plus(ib);
    }
  }
  double pre_norm_sq = amp.squaredNorm();
  if (pre_norm_sq <= 1e-12) {
    throw DegenerateProbe("probe superposition has vanishing norm");
  }
  amp /= std::sqrt(pre_norm_sq);

  int cut = dim - std::max(1, dim / 10);
  double tail = 0.0;
  for (int ia = 0; ia < dim; ++ia) {
    for (int ib = 0; ib < dim; ++ib) {
      if (ia >= cut || ib >= cut) tail += std::norm(amp(ia * dim + ib));
    }
  }
  return {dim, std::move(amp), tail, pre_norm_sq};
}

namespace {

// Apply a single-mode operator to mode A.  With the mode-A-major layout the
// amplitudes viewed column-major form M(iB, iA), so O on mode A is M * O^T.
Eigen::VectorXcd apply_on_a(const TwoModeState& state,
                            const Eigen::MatrixXcd& op) {
  int dim = state.dim;
  Eigen::Map<const Eigen::MatrixXcd> m(state.amplitudes.data(), dim, dim);
  Eigen::MatrixXcd res = m * op.transpose();
  return Eigen::Map<const Eigen::VectorXcd>(res.data(), dim * dim);
}

}  // namespace

double expectation_on_a(const FockWorkspace& ws, const TwoModeState& state,
                        const Eigen::MatrixXcd& op) {
  if (op.rows() != ws.dim() || state.dim != ws.dim()) {
    throw OutOfRange("operator/state dimension mismatch");
  }
  Eigen::VectorXcd ov = apply_on_a(state, op);
  return state.amplitudes.dot(ov).real();
}

double oracle_qfi(const FockWorkspace& ws, const TwoModeState& state,
                  const Eigen::MatrixXcd& generator) {
  if (generator.rows() != ws.dim() || state.dim != ws.dim()) {
    throw OutOfRange("generator/state dimension mismatch");
  }
  Eigen::VectorXcd gv = apply_on_a(state, generator);
  double mean = state.amplitudes.dot(gv).real();
  double second = gv.squaredNorm();  // <G psi|G psi> = <G^2> for Hermitian G
  return 4.0 * (second - mean * mean);
}

double oracle_entropy(const FockWorkspace& ws, const TwoModeState& state) {
  int dim = ws.dim();
  if (state.dim != dim) throw OutOfRange("state dimension mismatch");
  Eigen::Map<const Eigen::MatrixXcd> m(state.amplitudes.data(), dim, dim);
  // rho_A(iA, jA) = sum_b amp(iA, b) conj(amp(jA, b))
  Eigen::MatrixXcd rho = m.transpose() * m.conjugate();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      rho, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (double lam : solver.eigenvalues()) {
    if (lam > 1e-14) entropy -= lam * std::log2(lam);
  }
  return entropy;
}

std::complex<double> oracle_cross_element(const FockWorkspace& ws,
                                          const ComponentParams& c,
                                          const Eigen::MatrixXcd& op) {
  Eigen::VectorXcd plus = build_component(ws, c);
  Eigen::VectorXcd minus;
  if (c.alpha == 0.0) {
    minus = plus;
  } else {
    std::complex<double> xi = c.r * std::exp(kI * c.theta);
    Eigen::VectorXcd sv = ws.squeeze(xi) * ws.vacuum();
    minus = ws.displacement(c.alpha).adjoint() * sv;
  }
  return minus.dot(op * plus);
}

ProbeOracle::ProbeOracle(const ProbeParams& p, OracleOptions opts)
    : ws_(opts.dim) {
  int dim = opts.dim;
  for (;;) {
    if (dim != ws_.dim()) ws_ = FockWorkspace(dim);
    state_ = build_probe(ws_, p);
    if (state_.tail_mass < opts.tail_threshold) return;
    if (dim >= opts.dim_max) {
      throw TruncationNotConverged(
          "tail mass above threshold at the maximum truncation dimension");
    }
    dim = std::min(2 * dim, opts.dim_max);
  }
}

}  // namespace qbell
