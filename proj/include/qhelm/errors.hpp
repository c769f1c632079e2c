#ifndef QHELM_ERRORS_HPP
#define QHELM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qhelm {

enum class errc {
  invalid_mesh,
  mesh_alignment,
  eigensolver_failure,
  not_positive_definite,
  index_out_of_range,
  unnormalized_state,
  degenerate_projection,
  arity_unsupported,
  degenerate_denominator,
  truncation_exceeded,
  bad_config,
};

struct Error : std::runtime_error {
  errc code;
  Error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

inline void require(bool ok, errc c, const std::string& msg) {
  if (!ok) throw Error(c, msg);
}

}  // namespace qhelm

#endif
