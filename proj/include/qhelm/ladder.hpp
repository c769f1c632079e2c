#ifndef QHELM_LADDER_HPP
#define QHELM_LADDER_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qhelm/errors.hpp"

namespace qhelm {

enum class LadderKind { Annihilation, Creation };

// One factor  sum_p coeff_p a_p  or  sum_p coeff_p a^dag_p.
struct LadderFactor {
  LadderKind kind = LadderKind::Annihilation;
  Eigen::VectorXcd coeff;
};

// Ordered operator product as written left to right: factors[0] acts on the
// bra side of <0| ... |0>.
struct LadderProduct {
  std::vector<LadderFactor> factors;
};

namespace detail {

// plain (unconjugated) dot, the contraction value alpha^T beta
inline std::complex<double> contraction(const Eigen::VectorXcd& a,
                                        const Eigen::VectorXcd& b) {
  return a.cwiseProduct(b).sum();
}

// Sum over complete pairings where every annihilation factor contracts with a
// creation factor to its right; one commutator pass per recursion level.
inline std::complex<double> wick(const std::vector<const LadderFactor*>& fs) {
  if (fs.empty()) return 1.0;
  if (fs.front()->kind == LadderKind::Creation) return 0.0;  // <0| a^dag ... = 0
  std::complex<double> acc = 0.0;
  for (std::size_t j = 1; j < fs.size(); ++j) {
    if (fs[j]->kind != LadderKind::Creation) continue;
    std::vector<const LadderFactor*> rest;
    rest.reserve(fs.size() - 2);
    for (std::size_t k = 1; k < fs.size(); ++k)
      if (k != j) rest.push_back(fs[k]);
    acc += contraction(fs.front()->coeff, fs[j]->coeff) * wick(rest);
  }
  return acc;
}

}  // namespace detail

inline std::complex<double> vacuum_expectation(const LadderProduct& expr) {
  std::vector<const LadderFactor*> fs;
  fs.reserve(expr.factors.size());
  for (const LadderFactor& f : expr.factors) fs.push_back(&f);
  return detail::wick(fs);
}

}  // namespace qhelm

#endif
