#ifndef QHELM_STOKES_HPP
#define QHELM_STOKES_HPP

#include <cmath>
#include <complex>
#include <map>
#include <utility>

#include "qhelm/errors.hpp"

namespace qhelm {

// Two-port occupation-basis ket: (n, m) -> amplitude.  Keys are (port0, port1)
// occupations on the input side of the splitter, (port2, port3) on the output.
struct FockKet2Port {
  std::map<std::pair<int, int>, std::complex<double>> amplitudes;

  double norm2() const {
    double s = 0;
    for (const auto& [key, amp] : amplitudes) s += std::norm(amp);
    return s;
  }
};

// Creation operators through the lossless symmetric splitter:
//   a0+ -> (a2+ + i a3+)/sqrt(2),   a1+ -> (i a2+ + a3+)/sqrt(2).
inline FockKet2Port stokes_apply(const FockKet2Port& input, int max_total = 4) {
  require(std::abs(input.norm2() - 1.0) <= 1e-8, errc::unnormalized_state,
          "input ket must be normalized");
  constexpr std::complex<double> I{0, 1};
  const double rt2 = std::sqrt(2.0);
  const std::complex<double> c20 = 1.0 / rt2, c30 = I / rt2;  // from a0+
  const std::complex<double> c21 = I / rt2, c31 = 1.0 / rt2;  // from a1+

  auto fact = [](int n) {
    double f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
  };
  auto binom = [&](int n, int k) { return fact(n) / (fact(k) * fact(n - k)); };

  FockKet2Port out;
  for (const auto& [key, amp] : input.amplitudes) {
    const auto [n, m] = key;
    require(n >= 0 && m >= 0, errc::bad_config, "negative occupation number");
    require(n + m <= max_total, errc::truncation_exceeded,
            "total photon number exceeds the configured truncation");
    // expand (c20 a2+ + c30 a3+)^n (c21 a2+ + c31 a3+)^m over (a2+)^j (a3+)^k
    for (int r = 0; r <= n; ++r) {
      for (int s = 0; s <= m; ++s) {
        const int j = r + s;
        const int k = (n - r) + (m - s);
        const std::complex<double> poly = binom(n, r) * std::pow(c20, r) *
                                          std::pow(c30, n - r) * binom(m, s) *
                                          std::pow(c21, s) * std::pow(c31, m - s);
        out.amplitudes[{j, k}] +=
            amp * poly * std::sqrt(fact(j) * fact(k) / (fact(n) * fact(m)));
      }
    }
  }
  // drop numerically-zero entries so exact cancellations read as absent
  for (auto it = out.amplitudes.begin(); it != out.amplitudes.end();)
    it = (std::abs(it->second) < 1e-14) ? out.amplitudes.erase(it) : std::next(it);
  return out;
}

}  // namespace qhelm

#endif
