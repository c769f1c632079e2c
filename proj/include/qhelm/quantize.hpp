#ifndef QHELM_QUANTIZE_HPP
#define QHELM_QUANTIZE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <memory>

#include "qhelm/modes.hpp"

namespace qhelm {

// Diagonal quantum Hamiltonian data over the mode basis.  Zero-point energy is
// reported separately (it cancels in every observable here) and never added.
struct QuantizedField {
  std::shared_ptr<const ModeBasis> basis;
  PhysicalConstants constants;
  Eigen::VectorXd dH;  // hbar * omega_p  (J)

  double zero_point_energy() const { return 0.5 * dH.sum(); }
};

inline QuantizedField quantize(std::shared_ptr<const ModeBasis> basis,
                               PhysicalConstants constants = si) {
  QuantizedField f;
  f.basis = std::move(basis);
  f.constants = constants;
  f.dH = constants.hbar * f.basis->omega;
  return f;
}

inline QuantizedField quantize(const ModeBasis& basis, PhysicalConstants constants = si) {
  return quantize(std::make_shared<ModeBasis>(basis), constants);
}

// Coefficients of the positive-frequency field operator at one node and time:
// alpha_p = sqrt(hbar / 2 omega_p) e^{-i omega_p t} Phi[i, p].  The
// negative-frequency counterpart uses the conjugate coefficients.
struct DetectorCoefficients {
  Eigen::VectorXcd alpha;
  int position_index = 0;
  double time = 0;
};

inline DetectorCoefficients detector_alpha(const QuantizedField& field, int node,
                                           double t) {
  const ModeBasis& basis = *field.basis;
  require(node >= 0 && node < basis.Phi.rows(), errc::index_out_of_range,
          "detector node outside the mesh");
  DetectorCoefficients d;
  d.position_index = node;
  d.time = t;
  const int m = basis.n_modes();
  d.alpha.resize(m);
  const double hbar = field.constants.hbar;
  for (int p = 0; p < m; ++p) {
    const double w = basis.omega[p];
    d.alpha[p] = std::sqrt(hbar / (2 * w)) *
                 std::exp(std::complex<double>(0, -w * t)) * basis.Phi(node, p);
  }
  return d;
}

}  // namespace qhelm

#endif
