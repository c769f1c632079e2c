#ifndef QHELM_FOCK_ORACLE_HPP
#define QHELM_FOCK_ORACLE_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "qhelm/errors.hpp"
#include "qhelm/ladder.hpp"

namespace qhelm {

// Brute-force vacuum expectation on a dense truncated Fock space: apply the
// factors right-to-left to |0>, read back the vacuum amplitude.  Exact as long
// as the occupancy cap is at least the number of creation factors, so the
// default covers every product the engine's test suite generates.  Exponential
// in mode count -- an oracle, not a production path.
inline std::complex<double> fock_vacuum_expectation(const LadderProduct& product,
                                                    int occupancy_cap = 8) {
  int modes = 0;
  for (const auto& f : product.factors)
    modes = std::max(modes, static_cast<int>(f.coeff.size()));
  require(modes >= 1, errc::bad_config, "empty ladder factors");
  const int levels = occupancy_cap + 1;
  std::size_t dim = 1;
  for (int m = 0; m < modes; ++m) dim *= levels;
  require(dim <= (1u << 24), errc::truncation_exceeded, "fock space too large");

  std::vector<std::complex<double>> state(dim), next(dim);
  state[0] = 1.0;

  std::vector<std::size_t> stride(modes);
  for (int m = 0; m < modes; ++m)
    stride[m] = m == 0 ? 1 : stride[m - 1] * levels;

  for (auto it = product.factors.rbegin(); it != product.factors.rend(); ++it) {
    std::fill(next.begin(), next.end(), std::complex<double>(0));
    for (std::size_t idx = 0; idx < dim; ++idx) {
      const std::complex<double> amp = state[idx];
      if (amp == std::complex<double>(0)) continue;
      for (int m = 0; m < static_cast<int>(it->coeff.size()); ++m) {
        const std::complex<double> c = it->coeff[m];
        if (c == std::complex<double>(0)) continue;
        const int n = static_cast<int>(idx / stride[m]) % levels;
        if (it->kind == LadderKind::Creation) {
          if (n + 1 > occupancy_cap) continue;  // unreachable from vacuum anyway
          next[idx + stride[m]] += c * std::sqrt(double(n + 1)) * amp;
        } else if (n > 0) {
          next[idx - stride[m]] += c * std::sqrt(double(n)) * amp;
        }
      }
    }
    state.swap(next);
  }
  return state[0];
}

}  // namespace qhelm

#endif
