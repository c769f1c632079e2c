#ifndef QHELM_MEDIUM_HPP
#define QHELM_MEDIUM_HPP

#include <cmath>
#include <vector>

#include "qhelm/errors.hpp"

namespace qhelm {

// CODATA SI values; c is derived, not stored.
struct PhysicalConstants {
  double hbar = 1.054571817e-34;   // J s
  double mu0 = 1.25663706212e-6;   // H/m
  double eps0 = 8.8541878128e-12;  // F/m
  double c() const { return 1.0 / std::sqrt(mu0 * eps0); }
};

inline constexpr PhysicalConstants si{};

// Uniform grid over one cell [-Rx/2, +Rx/2]. Under Bloch-periodic boundary
// conditions the two end nodes are identified, so the system has n0-1 DoF.
struct Mesh1D {
  double Rx = 0;
  int n0 = 0;
  double dx = 0;
  std::vector<double> nodes;

  int n1() const { return n0 - 1; }
};

inline Mesh1D build_mesh(double Rx, int n0) {
  require(Rx > 0, errc::invalid_mesh, "build_mesh: cell length must be positive");
  require(n0 >= 3, errc::invalid_mesh, "build_mesh: need at least 3 grid points");
  Mesh1D m;
  m.Rx = Rx;
  m.n0 = n0;
  m.dx = Rx / (n0 - 1);
  m.nodes.resize(n0);
  for (int i = 0; i < n0; ++i) m.nodes[i] = -Rx / 2 + i * m.dx;
  m.nodes[n0 - 1] = Rx / 2;  // kill accumulated round-off at the far end
  return m;
}

// Single dielectric slab of relative permittivity eps_s and thickness Rs,
// centered in the cell, in a background of relative permittivity `background`.
struct PermittivityProfile {
  double eps_s = 1.0;
  double Rs = 0.0;
  double background = 1.0;
};

// eps(x) in F/m.  |x| <= Rs/2 is boundary-inclusive: interface nodes take the
// slab value (the slack absorbs round-off in node coordinates).
inline double sample_eps(const PermittivityProfile& p, double x) {
  const double slack = 1e-12 * (std::abs(x) + p.Rs + 1.0);
  return (std::abs(x) <= p.Rs / 2 + slack) ? p.eps_s * si.eps0 : p.background * si.eps0;
}

}  // namespace qhelm

#endif
