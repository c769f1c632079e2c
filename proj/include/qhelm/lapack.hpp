#ifndef QHELM_LAPACK_HPP
#define QHELM_LAPACK_HPP

#include <complex>

#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <Eigen/Dense>

#include "qhelm/errors.hpp"

namespace qhelm::detail {

// A x = lambda B x for Hermitian A, positive definite B (zhegvd, itype 1).
// On return `a` holds the eigenvectors, B-orthonormal (Z^H B Z = I); `w` the
// eigenvalues ascending.  `b` is destroyed (Cholesky factor).
inline void hermitian_generalized_eig(Eigen::MatrixXcd& a, Eigen::MatrixXcd& b,
                                      Eigen::VectorXd& w) {
  const auto n = static_cast<lapack_int>(a.rows());
  w.resize(n);
  lapack_int info = LAPACKE_zhegvd(LAPACK_COL_MAJOR, 1, 'V', 'L', n, a.data(), n,
                                   b.data(), n, w.data());
  if (info > n)
    throw Error(errc::not_positive_definite,
                "mass matrix is not positive definite (leading minor " +
                    std::to_string(info - n) + ")");
  if (info != 0)
    throw Error(errc::eigensolver_failure,
                "zhegvd failed to converge (info=" + std::to_string(info) + ")");
}

}  // namespace qhelm::detail

#endif
