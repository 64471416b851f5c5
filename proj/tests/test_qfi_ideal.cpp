#include <doctest.h>

#include <cmath>

#include "qbell/fock_oracle.hpp"
#include "qbell/qfi_ideal.hpp"

using namespace qbell;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("gamma1 checkpoints") {
  // vacuum: <n^2> = 0
  CHECK(gamma1({0.0, 0.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-15));
  // coherent: <n^2> = alpha^4 + alpha^2
  CHECK(gamma1({1.0, 0.0, 0.0}) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("gamma1 matches the oracle matrix element") {
  FockWorkspace ws(64);
  Eigen::MatrixXcd n2 = ws.number() * ws.number();
  ComponentParams c{0.6, 0.4, kPi / 3};
  Eigen::VectorXcd v = build_component(ws, c);
  double oracle = v.dot(n2 * v).real();
  CHECK(std::abs(gamma1(c) - oracle) < 1e-8);
}

TEST_CASE("gamma2 checkpoints") {
  CHECK(gamma2({0.0, 0.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-15));

  // identical component states at alpha = 0: gamma2 = 2 gamma1
  ComponentParams c{0.0, 0.5, 0.7};
  CHECK(gamma2(c) == doctest::Approx(2.0 * gamma1(c)).epsilon(1e-14));

  FockWorkspace ws(64);
  Eigen::MatrixXcd n2 = ws.number() * ws.number();
  ComponentParams d{0.8, 0.3, kPi};
  std::complex<double> cross = oracle_cross_element(ws, d, n2);
  CHECK(std::abs(gamma2(d) - 2.0 * cross.real()) < 1e-8);
}

TEST_CASE("ideal QFI checkpoints") {
  // coherent probe: H = 4 alpha^2
  CHECK(qfi_ideal({{1.0, 0.0, 0.0}, 0.0}).H == doctest::Approx(4.0).epsilon(1e-13));

  // squeezed vacuum at l = 0: H = cosh(4r) - 1
  CHECK(qfi_ideal({{0.0, 0.5, 1.9}, 0.0}).H ==
        doctest::Approx(std::cosh(2.0) - 1.0).epsilon(1e-13));

  // entangled probe against the oracle variance
  ProbeParams p({0.7, 0.4, kPi}, 1.0);
  ProbeOracle oracle(p);
  double h_oracle =
      oracle_qfi(oracle.workspace(), oracle.state(), oracle.workspace().number());
  double h = qfi_ideal(p).H;
  CHECK(std::abs(h - h_oracle) <= 1e-8 * std::max(1.0, h));
}

TEST_CASE("single-mode reference checkpoints") {
  CHECK(qfi_ideal_l0({1.0, 0.0, 0.0}) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(qfi_ideal_l0({0.0, 0.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-15));
  // 4(cosh 1 + sinh 1) + cosh 2 - 1 = 4e + cosh 2 - 1
  double expected = 4.0 * std::exp(1.0) + std::cosh(2.0) - 1.0;
  CHECK(qfi_ideal_l0({1.0, 0.5, kPi}) ==
        doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("assembled formula reduces to the single-mode form at l = 0") {
  for (double alpha = 0.0; alpha <= 2.0; alpha += 0.25) {
    for (double r = 0.0; r <= 1.5; r += 0.25) {
      for (double theta : {0.0, kPi / 2, kPi, 3 * kPi / 2}) {
        ComponentParams c{alpha, r, theta};
        CHECK(std::abs(qfi_ideal({c, 0.0}).H - qfi_ideal_l0(c)) < 1e-10);
      }
    }
  }
}

TEST_CASE("ideal QFI is even in theta") {
  for (double l : {-0.5, 0.0, 1.0}) {
    for (double theta : {0.7, 1.9, 2.8}) {
      double plus = qfi_ideal({{0.8, 0.5, theta}, l}).H;
      double minus = qfi_ideal({{0.8, 0.5, -theta}, l}).H;
      CHECK(plus == doctest::Approx(minus).epsilon(1e-12));
    }
  }
}

TEST_CASE("report carries the assembly pieces") {
  ProbeParams p({0.6, 0.3, 1.0}, 0.5);
  QfiReport rep = qfi_ideal(p);
  CHECK(rep.gamma1 == doctest::Approx(gamma1(p.component)).epsilon(1e-15));
  CHECK(rep.gamma2 == doctest::Approx(gamma2(p.component)).epsilon(1e-15));
  CHECK(rep.n_in_A == doctest::Approx(input_photon_number(p).n_in_A).epsilon(1e-15));
  CHECK(rep.H >= 0.0);
  CHECK(rep.H ==
        doctest::Approx(4.0 * (rep.generator_second_moment -
                               rep.generator_mean * rep.generator_mean))
            .epsilon(1e-12));
}
