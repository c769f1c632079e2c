#ifndef QHELM_ASSEMBLY_HPP
#define QHELM_ASSEMBLY_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "qhelm/medium.hpp"

namespace qhelm {

enum class Method { FDM, FEM };

// Matrix pair of the discrete Helmholtz problem  S phi = -omega^2 mu0 M phi
// under the Bloch phase theta0 (value at the right boundary = left * e^{i theta0}).
struct BlochSystem {
  Eigen::MatrixXcd S;  // 1/m
  Eigen::MatrixXcd M;  // F
  double theta0 = 0;
  Method method = Method::FDM;
  Mesh1D mesh;
  PermittivityProfile profile;
};

namespace detail {

inline void check_theta(double theta0) {
  require(theta0 > -M_PI - 1e-12 && theta0 <= M_PI + 1e-12, errc::bad_config,
          "Bloch phase must lie in (-pi, pi]");
}

// Slab interfaces +-Rs/2 must sit on mesh nodes (element-wise constant eps).
inline void check_alignment(const Mesh1D& mesh, const PermittivityProfile& prof) {
  const double t = prof.Rs / (2 * mesh.dx);
  require(std::abs(t - std::round(t)) <= 1e-9 * std::max(1.0, t), errc::mesh_alignment,
          "slab interfaces do not coincide with mesh nodes");
}

}  // namespace detail

// Central differences; eps sampled at nodes.  Wrap entries carry e^{-+i theta0}.
inline BlochSystem assemble_fdm(const Mesh1D& mesh, const PermittivityProfile& prof,
                                double theta0) {
  detail::check_theta(theta0);
  detail::check_alignment(mesh, prof);
  const int n1 = mesh.n1();
  const std::complex<double> wrap = std::exp(std::complex<double>(0, theta0));
  BlochSystem sys;
  sys.S = Eigen::MatrixXcd::Zero(n1, n1);
  sys.M = Eigen::MatrixXcd::Zero(n1, n1);
  sys.theta0 = theta0;
  sys.method = Method::FDM;
  sys.mesh = mesh;
  sys.profile = prof;
  const double dx = mesh.dx;
  for (int i = 0; i < n1; ++i) {
    sys.S(i, i) += -2.0 / dx;
    if (i + 1 < n1)
      sys.S(i, i + 1) += 1.0 / dx;
    else
      sys.S(i, 0) += wrap / dx;  // S[n1-1, 0] = e^{+i theta0}/dx
    if (i - 1 >= 0)
      sys.S(i, i - 1) += 1.0 / dx;
    else
      sys.S(i, n1 - 1) += std::conj(wrap) / dx;  // S[0, n1-1] = e^{-i theta0}/dx
    sys.M(i, i) = sample_eps(prof, mesh.nodes[i]) * dx;
  }
  return sys;
}

// P1 hat functions, element-wise constant eps (sampled at element midpoints);
// the wrap basis function carries the factor e^{i theta0}.
inline BlochSystem assemble_fem(const Mesh1D& mesh, const PermittivityProfile& prof,
                                double theta0) {
  detail::check_theta(theta0);
  detail::check_alignment(mesh, prof);
  const int n1 = mesh.n1();
  const std::complex<double> wrap = std::exp(std::complex<double>(0, theta0));
  BlochSystem sys;
  sys.S = Eigen::MatrixXcd::Zero(n1, n1);
  sys.M = Eigen::MatrixXcd::Zero(n1, n1);
  sys.theta0 = theta0;
  sys.method = Method::FEM;
  sys.mesh = mesh;
  sys.profile = prof;
  const double dx = mesh.dx;
  for (int e = 0; e < n1; ++e) {
    const double eps_e = sample_eps(prof, 0.5 * (mesh.nodes[e] + mesh.nodes[e + 1]));
    const int a = e;
    const int b = (e + 1) % n1;
    // basis value of the right-hand node on the last element: phase of the wrap basis
    const std::complex<double> pb = (e == n1 - 1) ? wrap : 1.0;
    // stiffness local block (1/dx)[[-1, 1], [1, -1]], right column/row times pb
    sys.S(a, a) += -1.0 / dx;
    sys.S(b, b) += -std::norm(pb) / dx;
    sys.S(a, b) += pb / dx;
    sys.S(b, a) += std::conj(pb) / dx;
    // mass local block (eps_e dx/6)[[2, 1], [1, 2]]
    sys.M(a, a) += eps_e * dx / 3.0;
    sys.M(b, b) += std::norm(pb) * eps_e * dx / 3.0;
    sys.M(a, b) += pb * eps_e * dx / 6.0;
    sys.M(b, a) += std::conj(pb) * eps_e * dx / 6.0;
  }
  return sys;
}

}  // namespace qhelm

#endif
