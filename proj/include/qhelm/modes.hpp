#ifndef QHELM_MODES_HPP
#define QHELM_MODES_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <optional>
#include <vector>

#include "qhelm/assembly.hpp"
#include "qhelm/lapack.hpp"

namespace qhelm {

inline double default_omega_floor(double Rx) { return 1e-6 * (2 * M_PI * si.c() / Rx); }

// Mass-orthonormal mode basis: Phi^H M Phi = I, omega ascending.
// kappa[p] = (theta0 + 2 pi p_label)/Rx is the extended-zone wavenumber label,
// assigned by pairing the ascending frequencies with the comb sorted by |kappa|.
struct ModeBasis {
  Eigen::MatrixXcd Phi;      // n1 x n_modes
  Eigen::VectorXd omega;     // rad/s
  Eigen::VectorXi p_labels;  // integer p per mode
  Eigen::VectorXd kappa;     // rad/m
  double theta0 = 0;
  std::shared_ptr<const BlochSystem> system;

  int n_modes() const { return static_cast<int>(omega.size()); }
};

struct OrthonormalityReport {
  double max_offdiag = 0;
  double max_diag_dev = 0;
};

namespace detail {

// Comb (theta0 + 2 pi p)/Rx sorted by |kappa| ascending; ties (theta0 = 0 or pi)
// resolved positive-p first, for determinism.
inline void assign_kappa_labels(ModeBasis& basis, double Rx) {
  const int m = basis.n_modes();
  struct Cand {
    double akappa;
    int p;
  };
  std::vector<Cand> cands;
  const int span = m / 2 + 2;
  cands.reserve(2 * span + 1);
  for (int p = -span; p <= span; ++p)
    cands.push_back({std::abs((basis.theta0 + 2 * M_PI * p) / Rx), p});
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.akappa != b.akappa) return a.akappa < b.akappa;
    return a.p > b.p;
  });
  basis.p_labels.resize(m);
  basis.kappa.resize(m);
  for (int j = 0; j < m; ++j) {
    basis.p_labels[j] = cands[j].p;
    basis.kappa[j] = (basis.theta0 + 2 * M_PI * cands[j].p) / Rx;
  }
}

// M-inner-product Gram-Schmidt within a degenerate cluster of columns.
inline void reorthonormalize_cluster(Eigen::MatrixXcd& Phi, const Eigen::MatrixXcd& M,
                                     int begin, int end) {
  for (int j = begin; j < end; ++j) {
    Eigen::VectorXcd mj = M * Phi.col(j);
    for (int k = begin; k < j; ++k) {
      const std::complex<double> c = Phi.col(k).dot(mj);
      Phi.col(j) -= c * Phi.col(k);
      mj = M * Phi.col(j);
    }
    Phi.col(j) /= std::sqrt(std::real(Phi.col(j).dot(mj)));
  }
}

}  // namespace detail

inline ModeBasis solve_modes(std::shared_ptr<const BlochSystem> sys_ptr,
                             double omega_floor) {
  const BlochSystem& system = *sys_ptr;
  const int n1 = system.mesh.n1();
  Eigen::MatrixXcd a = system.S;
  Eigen::MatrixXcd b = system.M;
  Eigen::VectorXd lam;
  detail::hermitian_generalized_eig(a, b, lam);  // lam = -omega^2 mu0, ascending
  b.resize(0, 0);

  ModeBasis basis;
  basis.theta0 = system.theta0;
  basis.system = std::move(sys_ptr);

  // lam ascending means omega descending; reverse, then drop floored modes.
  std::vector<int> keep;
  keep.reserve(n1);
  for (int j = n1 - 1; j >= 0; --j) {
    const double w = std::sqrt(std::max(-lam[j], 0.0) / si.mu0);
    if (w >= omega_floor) keep.push_back(j);
  }
  const int m = static_cast<int>(keep.size());
  basis.omega.resize(m);
  basis.Phi.resize(n1, m);
  for (int j = 0; j < m; ++j) {
    basis.omega[j] = std::sqrt(std::max(-lam[keep[j]], 0.0) / si.mu0);
    basis.Phi.col(j) = a.col(keep[j]);
  }
  a.resize(0, 0);

  // exact unit diagonal of Phi^H M Phi
  for (int j = 0; j < m; ++j) {
    const double d = std::real(basis.Phi.col(j).dot(system.M * basis.Phi.col(j)));
    require(d > 0, errc::eigensolver_failure, "non-positive mode norm");
    basis.Phi.col(j) /= std::sqrt(d);
  }

  // degenerate clusters (1e-9 relative) get a full M-orthonormalization pass
  int c0 = 0;
  while (c0 < m) {
    int c1 = c0 + 1;
    while (c1 < m &&
           std::abs(basis.omega[c1] - basis.omega[c1 - 1]) <= 1e-9 * basis.omega[c1])
      ++c1;
    if (c1 - c0 > 1) detail::reorthonormalize_cluster(basis.Phi, system.M, c0, c1);
    c0 = c1;
  }

  // deterministic per-mode phase: largest-magnitude component real positive
  for (int j = 0; j < m; ++j) {
    int imax = 0;
    basis.Phi.col(j).cwiseAbs().maxCoeff(&imax);
    const std::complex<double> z = basis.Phi(imax, j);
    if (std::abs(z) > 0) basis.Phi.col(j) *= std::conj(z) / std::abs(z);
  }

  detail::assign_kappa_labels(basis, system.mesh.Rx);
  return basis;
}

inline ModeBasis solve_modes(const BlochSystem& system, double omega_floor) {
  return solve_modes(std::make_shared<BlochSystem>(system), omega_floor);
}

inline ModeBasis solve_modes(std::shared_ptr<const BlochSystem> sys_ptr) {
  const double floor = default_omega_floor(sys_ptr->mesh.Rx);
  return solve_modes(std::move(sys_ptr), floor);
}

inline ModeBasis solve_modes(const BlochSystem& system) {
  return solve_modes(system, default_omega_floor(system.mesh.Rx));
}

inline OrthonormalityReport check_orthonormality(const ModeBasis& basis) {
  const Eigen::MatrixXcd G =
      basis.Phi.adjoint() * (basis.system->M * basis.Phi);
  OrthonormalityReport rep;
  for (int i = 0; i < G.rows(); ++i)
    for (int j = 0; j < G.cols(); ++j) {
      const double a = std::abs(G(i, j) - (i == j ? 1.0 : 0.0));
      if (i == j)
        rep.max_diag_dev = std::max(rep.max_diag_dev, a);
      else
        rep.max_offdiag = std::max(rep.max_offdiag, a);
    }
  return rep;
}

// Per-mode relative residual ||S phi + omega^2 mu0 M phi|| / (omega^2 mu0 ||M phi||).
inline Eigen::VectorXd mode_residuals(const ModeBasis& basis) {
  const BlochSystem& sys = *basis.system;
  Eigen::VectorXd r(basis.n_modes());
  for (int j = 0; j < basis.n_modes(); ++j) {
    const double w2mu = basis.omega[j] * basis.omega[j] * si.mu0;
    const Eigen::VectorXcd mphi = sys.M * basis.Phi.col(j);
    r[j] = (sys.S * basis.Phi.col(j) + w2mu * mphi).norm() / (w2mu * mphi.norm());
  }
  return r;
}

struct DispersionDiagram {
  struct Point {
    double kappa = 0;  // folded into [-pi/Rx, pi/Rx]
    double omega = 0;
    double theta0 = 0;
  };
  std::vector<Point> points;
};

// Solve each system and keep the lowest `bands` frequencies, folded to the
// first Brillouin zone (every mode of a theta0 system folds onto theta0/Rx).
// Without an explicit floor each system gets its resolution-based default.
inline DispersionDiagram fold_dispersion(const std::vector<BlochSystem>& systems,
                                         int bands,
                                         std::optional<double> omega_floor = {}) {
  DispersionDiagram diag;
  for (const BlochSystem& sys : systems) {
    const double Rx = sys.mesh.Rx;
    ModeBasis basis =
        omega_floor ? solve_modes(sys, *omega_floor) : solve_modes(sys);
    const int nb = std::min(bands, basis.n_modes());
    for (int b = 0; b < nb; ++b) {
      double k = basis.kappa[b];
      k -= (2 * M_PI / Rx) * std::round(k * Rx / (2 * M_PI));
      diag.points.push_back({k, basis.omega[b], sys.theta0});
    }
  }
  return diag;
}

}  // namespace qhelm

#endif
