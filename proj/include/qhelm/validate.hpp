#ifndef QHELM_VALIDATE_HPP
#define QHELM_VALIDATE_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qhelm/assembly.hpp"
#include "qhelm/correlations.hpp"
#include "qhelm/fock_oracle.hpp"
#include "qhelm/modes.hpp"
#include "qhelm/stokes.hpp"
#include "qhelm/tmm.hpp"

namespace qhelm {

struct SystemSpec {
  double Rx = 3.0;
  int n0 = 501;
  double eps_s = 20.0;
  double Rs = 0.3;
  double theta0 = M_PI / 2;
};

inline BlochSystem build_system(const SystemSpec& s, Method method) {
  const Mesh1D mesh = build_mesh(s.Rx, s.n0);
  const PermittivityProfile profile{s.eps_s, s.Rs, 1.0};
  return method == Method::FDM ? assemble_fdm(mesh, profile, s.theta0)
                               : assemble_fem(mesh, profile, s.theta0);
}

// Worst orthonormality defect of the mass-orthonormalized basis.  The corrupt
// hook deliberately bruises one eigenvector so callers can prove the check
// trips.
inline OrthonormalityReport orthonormality_check(const SystemSpec& s, Method method,
                                                 bool corrupt = false) {
  ModeBasis basis = solve_modes(build_system(s, method));
  if (corrupt) basis.Phi.col(0) *= 1 + 1e-3;  // scale-free: moves the Gram diagonal ~2e-3
  return check_orthonormality(basis);
}

// Interior theta0 sweep: folded numeric bands against the transfer-matrix
// dispersion, worst relative omega error over the first `bands` bands.  Sweep
// points sit strictly inside (0, pi) -- at the zone center/edge the trace
// touches +-1 tangentially and band roots collide.
inline double dispersion_check(const SystemSpec& s, Method method, int bands,
                               int theta_points) {
  double worst = 0;
  for (int j = 0; j < theta_points; ++j) {
    SystemSpec sweep = s;
    sweep.theta0 = (j + 0.5) * M_PI / theta_points;
    const ModeBasis basis = solve_modes(build_system(sweep, method));
    require(static_cast<int>(basis.omega.size()) >= bands, errc::eigensolver_failure,
            "not enough modes for requested band count");
    for (int b = 0; b < bands; ++b) {
      const double ref = tmm_band_omega(s.eps_s, s.Rs, s.Rx, sweep.theta0, b);
      worst = std::max(worst, std::abs(basis.omega[b] - ref) / ref);
    }
  }
  return worst;
}

namespace detail {

inline Eigen::VectorXcd random_cvec(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> dist;
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = std::complex<double>(dist(rng), dist(rng));
  return v;
}

}  // namespace detail

// Random ladder products against the dense Fock oracle; returns the worst
// floored-relative deviation.
inline double ladder_oracle_check(unsigned long long seed, int cases) {
  std::mt19937_64 rng(seed);
  double worst = 0;
  for (int c = 0; c < cases; ++c) {
    const int modes = 1 + static_cast<int>(rng() % 4);
    const int nfac = 1 + static_cast<int>(rng() % 6);
    LadderProduct prod;
    for (int f = 0; f < nfac; ++f) {
      LadderFactor factor;
      factor.kind = (rng() % 2) ? LadderKind::Creation : LadderKind::Annihilation;
      factor.coeff = detail::random_cvec(rng, modes);
      prod.factors.push_back(std::move(factor));
    }
    const std::complex<double> engine = vacuum_expectation(prod);
    const std::complex<double> oracle = fock_vacuum_expectation(prod);
    const double rel = std::abs(engine - oracle) / std::max(1.0, std::abs(oracle));
    worst = std::max(worst, rel);
  }
  return worst;
}

// Hand-expanded first/second order forms against the engine on random states.
inline double closed_form_check(unsigned long long seed, int sets) {
  std::mt19937_64 rng(seed);
  double worst = 0;
  for (int c = 0; c < sets; ++c) {
    const int m = 2 + static_cast<int>(rng() % 5);
    Eigen::VectorXcd b1 = detail::random_cvec(rng, m).normalized();
    Eigen::VectorXcd b2 = detail::random_cvec(rng, m).normalized();
    const Eigen::VectorXcd alpha = detail::random_cvec(rng, m);
    const Eigen::VectorXcd ai = detail::random_cvec(rng, m);
    const Eigen::VectorXcd aj = detail::random_cvec(rng, m);
    const PhotonState state = make_two_photon({b1}, {b2});

    std::vector<LadderFactor> mid1;
    mid1.push_back(detail::cre(alpha.conjugate()));
    mid1.push_back(detail::ann(alpha));
    const double e1 = std::real(detail::sandwich(state, std::move(mid1)));
    worst = std::max(worst, std::abs(e1 - first_order_closed(alpha, b1, b2)) /
                                std::max(1.0, std::abs(e1)));

    std::vector<LadderFactor> mid2;
    mid2.push_back(detail::cre(ai.conjugate()));
    mid2.push_back(detail::cre(aj.conjugate()));
    mid2.push_back(detail::ann(aj));
    mid2.push_back(detail::ann(ai));
    const double e2 = std::real(detail::sandwich(state, std::move(mid2)));
    worst = std::max(worst, std::abs(e2 - second_order_closed(ai, aj, b1, b2)) /
                                std::max(1.0, std::abs(e2)));
  }
  return worst;
}

struct StokesCheck {
  double pair_error = 0;       // worst |amp - expected| on the two-photon input
  double norm_deviation = 0;   // worst |norm2(out) - 1| over random inputs
};

inline StokesCheck stokes_check(unsigned long long seed, int trials) {
  StokesCheck r;
  FockKet2Port in;
  in.amplitudes[{1, 1}] = 1.0;
  const FockKet2Port out = stokes_apply(in);
  const std::complex<double> half_i(0, 1 / std::sqrt(2.0));
  auto amp = [&](int n, int m) {
    const auto it = out.amplitudes.find({n, m});
    return it == out.amplitudes.end() ? std::complex<double>(0) : it->second;
  };
  r.pair_error = std::max({std::abs(amp(2, 0) - half_i), std::abs(amp(1, 1)),
                           std::abs(amp(0, 2) - half_i)});

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  for (int t = 0; t < trials; ++t) {
    FockKet2Port ket;
    double norm2 = 0;
    for (int n = 0; n + 0 <= 4; ++n)
      for (int m = 0; n + m <= 4; ++m) {
        const std::complex<double> a(dist(rng), dist(rng));
        ket.amplitudes[{n, m}] = a;
        norm2 += std::norm(a);
      }
    for (auto& [k, a] : ket.amplitudes) a /= std::sqrt(norm2);
    const FockKet2Port mixed = stokes_apply(ket);
    r.norm_deviation = std::max(r.norm_deviation, std::abs(mixed.norm2() - 1.0));
  }
  return r;
}

// +-theta0 spectra must agree as multisets (time reversal).
inline double time_reversal_check(const SystemSpec& s, Method method) {
  SystemSpec neg = s;
  neg.theta0 = -s.theta0;
  const ModeBasis plus = solve_modes(build_system(s, method));
  const ModeBasis minus = solve_modes(build_system(neg, method));
  std::vector<double> wp(plus.omega.data(), plus.omega.data() + plus.omega.size());
  std::vector<double> wm(minus.omega.data(), minus.omega.data() + minus.omega.size());
  std::sort(wp.begin(), wp.end());
  std::sort(wm.begin(), wm.end());
  require(wp.size() == wm.size(), errc::eigensolver_failure, "spectrum size mismatch");
  double worst = 0;
  for (std::size_t i = 0; i < wp.size(); ++i)
    worst = std::max(worst, std::abs(wp[i] - wm[i]) / wm[i]);
  return worst;
}

// O(dx^2) convergence of homogeneous-cell eigenfrequencies: least-squares slope
// of log(error) vs log(dx) over a refinement ladder.
inline double convergence_slope(double Rx, double theta0, const std::vector<int>& ladder,
                                Method method, int modes_checked = 6) {
  require(ladder.size() >= 2, errc::bad_config, "refinement ladder needs >= 2 levels");
  std::vector<double> lx, ly;
  for (int n0 : ladder) {
    SystemSpec s;
    s.Rx = Rx;
    s.n0 = n0;
    s.eps_s = 1.0;
    s.Rs = 0;  // uniform cell
    s.theta0 = theta0;
    const ModeBasis basis = solve_modes(build_system(s, method));
    double err = 0;
    const int count = std::min<int>(modes_checked, basis.omega.size());
    for (int p = 0; p < count; ++p) {
      const double exact = si.c() * std::abs(basis.kappa[p]);
      err = std::max(err, std::abs(basis.omega[p] - exact) / exact);
    }
    lx.push_back(std::log(basis.system->mesh.dx));
    ly.push_back(std::log(err));
  }
  const auto n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Least-squares fit of a Gaussian dip  g2(tau) ~ base - depth exp(-(tau/s)^2):
// linear in (base, depth) for fixed s, golden-section on s.  Returns R^2.
inline double gaussian_dip_r2(const std::vector<double>& tau, const std::vector<double>& g2) {
  require(tau.size() == g2.size() && tau.size() >= 5, errc::bad_config,
          "gaussian fit needs a sampled curve");
  const auto n = tau.size();
  double tmax = 0;
  for (double t : tau) tmax = std::max(tmax, std::abs(t));
  auto sse_for = [&](double s, double* base = nullptr, double* depth = nullptr) {
    // normal equations for [1, -exp(-(t/s)^2)] basis
    double a11 = 0, a12 = 0, a22 = 0, r1 = 0, r2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = std::exp(-(tau[i] / s) * (tau[i] / s));
      a11 += 1;
      a12 += -e;
      a22 += e * e;
      r1 += g2[i];
      r2 += -e * g2[i];
    }
    const double det = a11 * a22 - a12 * a12;
    const double b = (a22 * r1 - a12 * r2) / det;
    const double d = (a11 * r2 - a12 * r1) / det;
    double sse = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = std::exp(-(tau[i] / s) * (tau[i] / s));
      const double fit = b - d * e;
      sse += (g2[i] - fit) * (g2[i] - fit);
    }
    if (base) *base = b;
    if (depth) *depth = d;
    return sse;
  };
  double lo = tmax * 1e-3, hi = tmax * 4;
  const double gr = (std::sqrt(5.0) - 1) / 2;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = sse_for(x1), f2 = sse_for(x2);
  for (int it = 0; it < 120; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = sse_for(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = sse_for(x2);
    }
  }
  const double sse = sse_for(0.5 * (lo + hi));
  double mean = 0;
  for (double v : g2) mean += v;
  mean /= n;
  double sst = 0;
  for (double v : g2) sst += (v - mean) * (v - mean);
  return 1.0 - sse / sst;
}

}  // namespace qhelm

#endif
