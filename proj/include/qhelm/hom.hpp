#ifndef QHELM_HOM_HPP
#define QHELM_HOM_HPP

#include <cmath>
#include <vector>

#include "qhelm/correlations.hpp"

namespace qhelm {

// Two counter-propagating single photons launched at -+x0 against the slab;
// the right launch point is perturbed by c*tau, detection happens at the fixed
// ports +-x0 at t0 = 2 x0 / c and t0 + tau (positions swapped by the sign of
// tau so each event tracks the packet arriving at that port).
struct HomConfig {
  double Rx = 1.5;
  int n0 = 2501;
  PermittivityProfile profile{7.0, 6e-3, 1.0};
  double theta0 = M_PI / 2;
  Method method = Method::FEM;
  double x0 = 0.375;
  double dx0 = 0.03;
  double kappa0 = 526.0;
  PacketShape left_shape = PacketShape::Gaussian;
  PacketShape right_shape = PacketShape::Gaussian;
  std::vector<double> taus;  // seconds; empty selects the default grid
  bool literal_b1 = false;   // source-text reading of the first denominator event
  double omega_floor = 0;    // 0 selects default_omega_floor(Rx)
};

// 41 delays, uniform in launch offset delta x0 over [-span, span] metres.
inline std::vector<double> default_tau_grid(double span = 0.12, int count = 41) {
  std::vector<double> taus(count);
  for (int i = 0; i < count; ++i)
    taus[i] = (-span + 2 * span * i / (count - 1)) / si.c();
  return taus;
}

struct CorrelationCurve {
  struct Point {
    double tau = 0;
    double g2 = 0;
  };
  std::vector<Point> points;
  double baseline = 0;
  double dip = 0;  // g2 at the grid point nearest tau = 0
  double visibility = 0;
};

namespace detail {

inline int nearest_node(const Mesh1D& mesh, double x) {
  const int i = static_cast<int>(std::lround((x + mesh.Rx / 2) / mesh.dx));
  return ((i % mesh.n1()) + mesh.n1()) % mesh.n1();
}

}  // namespace detail

// The tau sweep against a prebuilt quantized basis (shared across cases).
inline CorrelationCurve hom_curve(const QuantizedField& field, const HomConfig& cfg) {
  const ModeBasis& basis = *field.basis;
  const Mesh1D& mesh = basis.system->mesh;
  const double c = field.constants.c();
  std::vector<double> taus = cfg.taus.empty() ? default_tau_grid() : cfg.taus;
  for (double tau : taus)
    require(std::abs(c * tau) + cfg.x0 < cfg.Rx / 2, errc::bad_config,
            "perturbed launch point leaves the cell");

  const WavePacket left{cfg.left_shape, +cfg.kappa0, -cfg.x0, cfg.dx0, 1.0};
  const ModalAmplitudes bl = project_packet(left, basis);
  const int node_l = detail::nearest_node(mesh, -cfg.x0);
  const int node_r = detail::nearest_node(mesh, +cfg.x0);
  const double t0 = 2 * cfg.x0 / c;

  CorrelationCurve curve;
  curve.points.reserve(taus.size());
  for (double tau : taus) {
    const WavePacket right{cfg.right_shape, -cfg.kappa0, cfg.x0 + c * tau, cfg.dx0, 1.0};
    const PhotonState state = make_two_photon(bl, project_packet(right, basis));
    const Event e1{tau >= 0 ? node_r : node_l, t0};
    const Event e2{tau >= 0 ? node_l : node_r, t0 + tau};
    const double A =
        second_order_numerator(field, state, e1.node, e1.t, e2.node, e2.t);
    const double B1 =
        cfg.literal_b1 ? first_order(field, state, e2.node, t0)
                       : first_order(field, state, e1.node, e1.t);
    const double B2 = first_order(field, state, e2.node, e2.t);
    const double cap = detector_alpha(field, e1.node, e1.t).alpha.squaredNorm() +
                       detector_alpha(field, e2.node, e2.t).alpha.squaredNorm();
    require(B1 > 1e-30 * cap && B2 > 1e-30 * cap, errc::degenerate_denominator,
            "detection event in a dead zone");
    curve.points.push_back({tau, A / (B1 * B2)});
  }

  // baseline: fully distinguishable tail |tau| >= 4 dx0 / c (inclusive)
  const double tau_tail = 4 * cfg.dx0 / c;
  double acc = 0;
  int cnt = 0;
  for (const auto& pt : curve.points)
    if (std::abs(pt.tau) >= tau_tail * (1 - 1e-12)) {
      acc += pt.g2;
      ++cnt;
    }
  require(cnt > 0, errc::bad_config, "tau grid has no baseline points beyond 4 dx0/c");
  curve.baseline = acc / cnt;

  double best = std::abs(curve.points.front().tau);
  for (const auto& pt : curve.points)
    if (std::abs(pt.tau) <= best) {
      best = std::abs(pt.tau);
      curve.dip = pt.g2;
    }
  curve.visibility = 1 - curve.dip / curve.baseline;
  return curve;
}

inline QuantizedField build_hom_field(const HomConfig& cfg) {
  const Mesh1D mesh = build_mesh(cfg.Rx, cfg.n0);
  auto sys = std::make_shared<BlochSystem>(
      cfg.method == Method::FEM ? assemble_fem(mesh, cfg.profile, cfg.theta0)
                                : assemble_fdm(mesh, cfg.profile, cfg.theta0));
  const double floor = cfg.omega_floor > 0 ? cfg.omega_floor : default_omega_floor(cfg.Rx);
  auto basis = std::make_shared<ModeBasis>(solve_modes(std::move(sys), floor));
  return quantize(std::move(basis));
}

inline CorrelationCurve run_hom(const HomConfig& cfg) {
  return hom_curve(build_hom_field(cfg), cfg);
}

struct HomCases {
  CorrelationCurve a;  // Gaussian + Gaussian
  CorrelationCurve b;  // Lorentzian + Lorentzian
  CorrelationCurve c;  // Gaussian + Lorentzian
};

// The three shape pairings share one eigensolve.
inline HomCases run_hom_cases(const HomConfig& base) {
  const QuantizedField field = build_hom_field(base);
  HomConfig cfg = base;
  HomCases out;
  cfg.left_shape = PacketShape::Gaussian;
  cfg.right_shape = PacketShape::Gaussian;
  out.a = hom_curve(field, cfg);
  cfg.left_shape = PacketShape::Lorentzian;
  cfg.right_shape = PacketShape::Lorentzian;
  out.b = hom_curve(field, cfg);
  cfg.left_shape = PacketShape::Gaussian;
  cfg.right_shape = PacketShape::Lorentzian;
  out.c = hom_curve(field, cfg);
  return out;
}

}  // namespace qhelm

#endif
