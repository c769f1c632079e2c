#include <catch2/catch_amalgamated.hpp>

#include "qhelm/modes.hpp"
#include "qhelm/validate.hpp"

using namespace qhelm;
using Catch::Approx;

namespace {

ModeBasis solve(double Rx, int n0, double eps_s, double Rs, double theta0, Method m) {
  return solve_modes(build_system({Rx, n0, eps_s, Rs, theta0}, m));
}

}  // namespace

TEST_CASE("mass-orthonormal basis", "[modes]") {
  for (Method m : {Method::FDM, Method::FEM}) {
    const ModeBasis basis = solve(3.0, 201, 20.0, 0.3, M_PI / 2, m);
    REQUIRE(basis.omega.size() == 200);
    const OrthonormalityReport on = check_orthonormality(basis);
    REQUIRE(on.max_offdiag < 1e-12);
    REQUIRE(on.max_diag_dev < 1e-12);
  }
}

TEST_CASE("frequencies ascend and residuals vanish", "[modes]") {
  const ModeBasis basis = solve(3.0, 201, 20.0, 0.3, 0.9, Method::FEM);
  for (int i = 1; i < basis.omega.size(); ++i)
    REQUIRE(basis.omega[i] >= basis.omega[i - 1]);
  // low modes divide an absolute backward error ~||S||eps by a small omega^2,
  // so the floor is the pencil's spread (~1e5 here), not machine epsilon
  const Eigen::VectorXd res = mode_residuals(basis);
  REQUIRE(res.maxCoeff() < 1e-8);
}

TEST_CASE("homogeneous cell reproduces light lines", "[modes]") {
  // omega_p = c |kappa_p|, kappa_p = (theta0 + 2 pi p) / Rx; second order in dx
  const double Rx = 2.0;
  const ModeBasis basis = solve(Rx, 401, 1.0, 0.0, M_PI / 2, Method::FEM);
  for (int i = 0; i < 8; ++i) {
    const double exact = si.c() * std::abs(basis.kappa[i]);
    REQUIRE(basis.omega[i] == Approx(exact).epsilon(2e-3));
  }
  // and the labels recover kappa_p = (theta0 + 2 pi p)/Rx
  for (int i = 0; i < 8; ++i) {
    const double back = (M_PI / 2 + 2 * M_PI * basis.p_labels[i]) / Rx;
    REQUIRE(basis.kappa[i] == Approx(back).margin(1e-12));
  }
}

TEST_CASE("time reversal pairs the spectra", "[modes]") {
  for (Method m : {Method::FDM, Method::FEM})
    REQUIRE(time_reversal_check({3.0, 201, 20.0, 0.3, 1.3}, m) < 1e-9);
}

TEST_CASE("zero modes are dropped by the frequency floor", "[modes]") {
  // theta0 = 0 has a constant zero-frequency mode; the floor removes it
  const ModeBasis basis = solve(2.0, 101, 1.0, 0.0, 0.0, Method::FEM);
  REQUIRE(basis.omega.size() == 99);  // n1 - 1
  REQUIRE(basis.omega[0] > 0);
  const ModeBasis all = solve_modes(build_system({2.0, 101, 1.0, 0.0, 0.0}, Method::FEM),
                                    -1.0);  // floor below zero keeps everything
  REQUIRE(all.omega.size() == 100);
}

TEST_CASE("eigenfrequency convergence is second order", "[modes]") {
  for (Method m : {Method::FDM, Method::FEM}) {
    const double slope = convergence_slope(1.0, M_PI / 2, {101, 201, 401}, m);
    REQUIRE(slope == Approx(2.0).margin(0.1));
  }
}

TEST_CASE("dispersion folding lands in the first zone", "[modes]") {
  std::vector<BlochSystem> systems;
  systems.push_back(build_system({3.0, 201, 20.0, 0.3, 0.8}, Method::FEM));
  systems.push_back(build_system({3.0, 201, 20.0, 0.3, 2.2}, Method::FEM));
  const DispersionDiagram d = fold_dispersion(systems, 4);
  REQUIRE(d.points.size() == 8);
  for (const auto& pt : d.points) {
    REQUIRE(std::abs(pt.kappa) <= M_PI / 3.0 + 1e-12);
    REQUIRE(pt.omega > 0);
  }
}

TEST_CASE("refusing an indefinite mass matrix", "[modes]") {
  BlochSystem sys = build_system({3.0, 201, 20.0, 0.3, 1.0}, Method::FEM);
  sys.M(5, 5) = -5.0 * std::abs(sys.M(5, 5));
  bool threw = false;
  try {
    solve_modes(sys);
  } catch (const Error& e) {
    threw = true;
    REQUIRE(e.code == errc::not_positive_definite);
  }
  REQUIRE(threw);
}
