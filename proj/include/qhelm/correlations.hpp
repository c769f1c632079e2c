#ifndef QHELM_CORRELATIONS_HPP
#define QHELM_CORRELATIONS_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "qhelm/ladder.hpp"
#include "qhelm/packets.hpp"
#include "qhelm/quantize.hpp"

namespace qhelm {

namespace detail {

inline LadderFactor ann(Eigen::VectorXcd c) {
  return {LadderKind::Annihilation, std::move(c)};
}
inline LadderFactor cre(Eigen::VectorXcd c) { return {LadderKind::Creation, std::move(c)}; }

// <Psi| F |Psi> with |Psi> built from the state's creation factors; bra-side
// coefficients are conjugated.
inline std::complex<double> sandwich(const PhotonState& state,
                                     std::vector<LadderFactor> middle) {
  LadderProduct prod;
  if (state.arity == 2) prod.factors.push_back(ann(state.beta2.g.conjugate()));
  prod.factors.push_back(ann(state.beta1.g.conjugate()));
  for (LadderFactor& f : middle) prod.factors.push_back(std::move(f));
  prod.factors.push_back(cre(state.beta1.g));
  if (state.arity == 2) prod.factors.push_back(cre(state.beta2.g));
  return vacuum_expectation(prod);
}

}  // namespace detail

// <Psi|Psi>; 1 for a single photon, 1 + |beta1^H beta2|^2 for the pair.
inline double state_norm2(const PhotonState& state) {
  require(state.arity == 1 || state.arity == 2, errc::arity_unsupported,
          "states carry one or two photons");
  return std::real(detail::sandwich(state, {}));
}

// <Psi| A^(-) A^(+) |Psi> at one detection event (intensity; not normalized by
// the state norm — g2 denominators cancel it).
inline double first_order(const QuantizedField& field, const PhotonState& state,
                          int node, double t) {
  require(state.arity == 1 || state.arity == 2, errc::arity_unsupported,
          "first_order supports one- and two-photon states");
  const Eigen::VectorXcd alpha = detector_alpha(field, node, t).alpha;
  std::vector<LadderFactor> mid;
  mid.push_back(detail::cre(alpha.conjugate()));  // A^(-)
  mid.push_back(detail::ann(alpha));              // A^(+)
  const double v = std::real(detail::sandwich(state, std::move(mid)));
  return std::max(v, 0.0);
}

// Two-event numerator  <Psi| A^(-)(i) A^(-)(j) A^(+)(j) A^(+)(i) |Psi>.
inline double second_order_numerator(const QuantizedField& field, const PhotonState& state,
                                     int node_i, double t_i, int node_j, double t_j) {
  require(state.arity == 2, errc::arity_unsupported,
          "second_order_numerator needs a two-photon state");
  const Eigen::VectorXcd ai = detector_alpha(field, node_i, t_i).alpha;
  const Eigen::VectorXcd aj = detector_alpha(field, node_j, t_j).alpha;
  std::vector<LadderFactor> mid;
  mid.push_back(detail::cre(ai.conjugate()));
  mid.push_back(detail::cre(aj.conjugate()));
  mid.push_back(detail::ann(aj));
  mid.push_back(detail::ann(ai));
  const double v = std::real(detail::sandwich(state, std::move(mid)));
  return std::max(v, 0.0);
}

// Hand-expanded forms of the two engine results above, kept as regression
// references: the pair amplitude is the *symmetrized* product
// (a_j2 a_i1 + a_i2 a_j1) — bosonic exchange enters with a plus sign.
inline double first_order_closed(const Eigen::VectorXcd& alpha, const Eigen::VectorXcd& b1,
                                 const Eigen::VectorXcd& b2) {
  const std::complex<double> a1 = detail::contraction(alpha, b1);
  const std::complex<double> a2 = detail::contraction(alpha, b2);
  const std::complex<double> c12 = b1.dot(b2);  // b1^H b2
  const double n1 = b1.squaredNorm();
  const double n2 = b2.squaredNorm();
  return n2 * std::norm(a1) + n1 * std::norm(a2) +
         2 * std::real(std::conj(a1) * a2 * std::conj(c12));
}

inline double second_order_closed(const Eigen::VectorXcd& ai, const Eigen::VectorXcd& aj,
                                  const Eigen::VectorXcd& b1, const Eigen::VectorXcd& b2) {
  const std::complex<double> amp = detail::contraction(aj, b2) * detail::contraction(ai, b1) +
                                   detail::contraction(ai, b2) * detail::contraction(aj, b1);
  return std::norm(amp);
}

struct Event {
  int node = 0;
  double t = 0;
};

// g2 = A / (B1 B2); the state norm cancels between numerator and denominators.
inline double g2(const QuantizedField& field, const PhotonState& state, Event e1,
                 Event e2) {
  const double A = second_order_numerator(field, state, e1.node, e1.t, e2.node, e2.t);
  const double B1 = first_order(field, state, e1.node, e1.t);
  const double B2 = first_order(field, state, e2.node, e2.t);
  // dead-zone guard, relative to the largest possible intensity at these events
  const double cap = detector_alpha(field, e1.node, e1.t).alpha.squaredNorm() +
                     detector_alpha(field, e2.node, e2.t).alpha.squaredNorm();
  const double tiny = 1e-30 * cap;
  require(B1 > tiny && B2 > tiny, errc::degenerate_denominator,
          "detector sits in a dead zone (vanishing intensity)");
  return A / (B1 * B2);
}

// Energy expectation (zero-point excluded), via the ladder engine:
// sum_p hbar omega_p <Psi| a_p^dag a_p |Psi> / <Psi|Psi>.
inline double hamiltonian_expectation(const QuantizedField& field,
                                      const PhotonState& state) {
  require(state.arity == 1 || state.arity == 2, errc::arity_unsupported,
          "hamiltonian_expectation supports one- and two-photon states");
  const double norm1 = state.beta1.g.norm();
  require(std::abs(norm1 - 1.0) <= 1e-8, errc::unnormalized_state,
          "photon amplitudes must be unit-normalized");
  if (state.arity == 2)
    require(std::abs(state.beta2.g.norm() - 1.0) <= 1e-8, errc::unnormalized_state,
            "photon amplitudes must be unit-normalized");
  const int m = static_cast<int>(state.beta1.g.size());
  double acc = 0;
  Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(m);
  for (int p = 0; p < m; ++p) {
    unit[p] = 1.0;
    std::vector<LadderFactor> mid;
    mid.push_back(detail::cre(unit));
    mid.push_back(detail::ann(unit));
    acc += field.dH[p] * std::real(detail::sandwich(state, std::move(mid)));
    unit[p] = 0.0;
  }
  return acc / state_norm2(state);
}

}  // namespace qhelm

#endif
