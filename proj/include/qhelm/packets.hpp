#ifndef QHELM_PACKETS_HPP
#define QHELM_PACKETS_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "qhelm/modes.hpp"

namespace qhelm {

enum class PacketShape { Gaussian, Lorentzian };

// Spatial envelope with carrier:  env(x - x0) * e^{i kappa0 (x - x0)}.
// Gaussian: exp(-((x-x0)/(sqrt(2) dx0))^2);  Lorentzian: exp(-|x-x0|/dx0).
struct WavePacket {
  PacketShape shape = PacketShape::Gaussian;
  double kappa0 = 0;  // signed carrier, rad/m
  double x0 = 0;
  double dx0 = 0;
  double amplitude = 1.0;  // overall constant; fixed numerically post-projection
};

inline std::complex<double> evaluate_packet(const WavePacket& p, double x) {
  const double u = x - p.x0;
  double env;
  if (p.shape == PacketShape::Gaussian) {
    const double s = u / (std::sqrt(2.0) * p.dx0);
    env = std::exp(-s * s);
  } else {
    env = std::exp(-std::abs(u) / p.dx0);
  }
  return p.amplitude * env * std::exp(std::complex<double>(0, p.kappa0 * u));
}

// Modal probability amplitudes of a single photon, unit 2-norm.
struct ModalAmplitudes {
  Eigen::VectorXcd g;
};

// g = Phi^H M {G(x_i)}, rescaled to unit norm (this fixes the packet constant).
inline ModalAmplitudes project_packet(const WavePacket& packet, const ModeBasis& basis,
                                      double* pre_norm = nullptr) {
  require(packet.dx0 > 0, errc::bad_config, "packet width must be positive");
  const Mesh1D& mesh = basis.system->mesh;
  const int n1 = mesh.n1();
  Eigen::VectorXcd G(n1);
  for (int i = 0; i < n1; ++i) G[i] = evaluate_packet(packet, mesh.nodes[i]);
  Eigen::VectorXcd g = basis.Phi.adjoint() * (basis.system->M * G);
  const double nrm = g.norm();
  if (pre_norm) *pre_norm = nrm;
  require(nrm >= 1e-12, errc::degenerate_projection,
          "packet is orthogonal to the retained modes");
  return {g / nrm};
}

// One- or two-photon (product) state.  For arity 2 the physical norm is
// <Psi|Psi> = 1 + |beta1^H beta2|^2; it is NOT forced to 1 here — correlation
// denominators carry the normalization.
struct PhotonState {
  int arity = 1;
  ModalAmplitudes beta1;
  ModalAmplitudes beta2;
};

inline PhotonState make_single_photon(ModalAmplitudes amps) {
  require(std::abs(amps.g.norm() - 1.0) <= 1e-8, errc::unnormalized_state,
          "photon amplitudes must be unit-normalized");
  return {1, std::move(amps), {}};
}

inline PhotonState make_two_photon(ModalAmplitudes left, ModalAmplitudes right) {
  require(std::abs(left.g.norm() - 1.0) <= 1e-8 && std::abs(right.g.norm() - 1.0) <= 1e-8,
          errc::unnormalized_state, "two-photon factors must be unit-normalized");
  return {2, std::move(left), std::move(right)};
}

}  // namespace qhelm

#endif
