#ifndef QHELM_TMM_HPP
#define QHELM_TMM_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "qhelm/errors.hpp"
#include "qhelm/medium.hpp"

namespace qhelm {

struct SlabResponse {
  double kappa = 0;
  std::complex<double> R;
  std::complex<double> T;
};

// Normal-incidence slab, standard two-interface composition.  R is referenced
// at the front face; T is referenced against free propagation across the slab
// (t * e^{-i kappa Rs}), i.e. both coefficients describe the slab's excess
// response.  |R|^2 + |T|^2 = 1 for the lossless slab.
inline SlabResponse slab_rt(double eps_s, double Rs, double kappa) {
  require(kappa > 0, errc::bad_config, "slab_rt needs kappa > 0");
  require(eps_s >= 1, errc::bad_config, "slab_rt needs eps_s >= 1");
  const double n = std::sqrt(eps_s);
  const double r1 = (1 - n) / (1 + n);
  const std::complex<double> ph = std::exp(std::complex<double>(0, n * kappa * Rs));
  const std::complex<double> ph2 = ph * ph;
  const std::complex<double> den = 1.0 - r1 * r1 * ph2;
  SlabResponse resp;
  resp.kappa = kappa;
  resp.R = r1 * (1.0 - ph2) / den;
  resp.T = (1 - r1 * r1) * ph / den * std::exp(std::complex<double>(0, -kappa * Rs));
  return resp;
}

// arg(R) - arg(T) in degrees, wrapped to (-180, 180].
inline double phase_diff_deg(const SlabResponse& r) {
  double d = (std::arg(r.R) - std::arg(r.T)) * 180.0 / M_PI;
  while (d <= -180.0) d += 360.0;
  while (d > 180.0) d -= 360.0;
  return d;
}

inline std::vector<SlabResponse> design_scan(double eps_s, double Rs, double kappa_min,
                                             double kappa_max, int count) {
  require(count >= 1 && kappa_max >= kappa_min && kappa_min > 0, errc::bad_config,
          "bad design scan range");
  std::vector<SlabResponse> table;
  table.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double k =
        count == 1 ? kappa_min : kappa_min + (kappa_max - kappa_min) * i / (count - 1);
    table.push_back(slab_rt(eps_s, Rs, k));
  }
  return table;
}

// Trace of the unit-cell transfer matrix (vacuum stretch d1 = Rx - Rs plus slab
// d2 = Rs):  cos(kappa Rx) = trace(omega).
inline double dispersion_trace(double eps_s, double Rs, double Rx, double omega) {
  const double c = si.c();
  const double k1 = omega / c;
  const double k2 = std::sqrt(eps_s) * omega / c;
  const double d1 = Rx - Rs;
  const double d2 = Rs;
  return std::cos(k1 * d1) * std::cos(k2 * d2) -
         0.5 * (k1 / k2 + k2 / k1) * std::sin(k1 * d1) * std::sin(k2 * d2);
}

// kappa in [0, pi/Rx] for a propagating omega; nullopt inside a band gap.
inline std::optional<double> bloch_dispersion(double eps_s, double Rs, double Rx,
                                              double omega) {
  require(omega > 0, errc::bad_config, "bloch_dispersion needs omega > 0");
  const double tr = dispersion_trace(eps_s, Rs, Rx, omega);
  if (std::abs(tr) > 1.0) return std::nullopt;
  return std::acos(tr) / Rx;
}

// Inverse dispersion: the `band`-th (0-based) root of trace(omega) = cos(theta0),
// ascending in omega.  Scan step is a fraction of the optical-path root spacing.
inline double tmm_band_omega(double eps_s, double Rs, double Rx, double theta0,
                             int band) {
  require(band >= 0, errc::bad_config, "band index must be >= 0");
  const double target = std::cos(theta0);
  const double opl = (Rx - Rs) + std::sqrt(eps_s) * Rs;
  const double step = M_PI * si.c() / opl / 64;
  auto f = [&](double w) { return dispersion_trace(eps_s, Rs, Rx, w) - target; };
  int found = 0;
  double lo = step * 1e-9;
  double flo = f(lo);
  for (int i = 1; i < 100000000; ++i) {
    const double hi = step * i;
    const double fhi = f(hi);
    if (flo == 0.0 || flo * fhi < 0) {
      if (found == band) {
        double a = lo, b = hi;
        for (int it = 0; it < 200 && (b - a) > 1e-14 * b; ++it) {
          const double mid = 0.5 * (a + b);
          (f(a) * f(mid) <= 0 ? b : a) = mid;
        }
        return 0.5 * (a + b);
      }
      ++found;
    }
    lo = hi;
    flo = fhi;
  }
  throw Error(errc::eigensolver_failure, "dispersion root search exhausted");
}

}  // namespace qhelm

#endif
