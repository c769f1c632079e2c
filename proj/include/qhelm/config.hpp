#ifndef QHELM_CONFIG_HPP
#define QHELM_CONFIG_HPP

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "qhelm/assembly.hpp"
#include "qhelm/errors.hpp"
#include "qhelm/hom.hpp"
#include "qhelm/packets.hpp"

namespace qhelm {

// Full run configuration.  Defaults reproduce the quantum-beam-splitter setup
// (1.5 m cell, 2501-node mesh, eps=7 slab of 6 mm, 526 rad/m carriers).
struct RunConfig {
  double Rx = 1.5;
  int n0 = 2501;
  double eps_s = 7.0;
  double Rs = 6e-3;
  double theta0 = M_PI / 2;
  Method method = Method::FEM;
  double omega_floor = 0;  // 0 -> resolution-based default

  double x0 = 0.375;
  double dx0 = 0.03;
  double kappa0 = 526.0;
  PacketShape left_shape = PacketShape::Gaussian;
  PacketShape right_shape = PacketShape::Gaussian;

  double tau_span = 0.12;  // delta_x0 half-range (m); tau = delta_x0 / c
  int tau_count = 41;
  bool literal_b1 = false;

  int bands = 4;
  int theta_points = 32;

  double kappa_min = 10.0;
  double kappa_max = 1200.0;
  int kappa_count = 1200;

  unsigned long long seed = 20250817ull;
  int ladder_cases = 1000;
  int closed_form_sets = 100;
  std::vector<int> refinement_ladder{201, 401, 801};
  bool corrupt_modes = false;  // self-test hook: validate must then FAIL

  HomConfig hom() const {
    HomConfig h;
    h.Rx = Rx;
    h.n0 = n0;
    h.profile = {eps_s, Rs, 1.0};
    h.theta0 = theta0;
    h.method = method;
    h.omega_floor = omega_floor;
    h.x0 = x0;
    h.dx0 = dx0;
    h.kappa0 = kappa0;
    h.left_shape = left_shape;
    h.right_shape = right_shape;
    h.taus = default_tau_grid(tau_span, tau_count);
    h.literal_b1 = literal_b1;
    return h;
  }
};

namespace detail {

inline void check_keys(const YAML::Node& node, const std::string& section,
                       const std::set<std::string>& allowed) {
  if (!node) return;
  require(node.IsMap(), errc::bad_config, "config section '" + section + "' must be a map");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    require(allowed.count(key) != 0, errc::bad_config,
            "unknown key '" + key + "' in section '" + section + "'");
  }
}

inline PacketShape parse_shape(const std::string& s) {
  if (s == "gaussian") return PacketShape::Gaussian;
  if (s == "lorentzian") return PacketShape::Lorentzian;
  throw Error(errc::bad_config, "unknown packet shape '" + s + "'");
}

inline Method parse_method(const std::string& s) {
  if (s == "fdm") return Method::FDM;
  if (s == "fem") return Method::FEM;
  throw Error(errc::bad_config, "unknown method '" + s + "'");
}

template <typename T>
void read(const YAML::Node& section, const char* key, T& out) {
  if (section && section[key]) out = section[key].as<T>();
}

}  // namespace detail

inline RunConfig parse_config(const YAML::Node& root) {
  RunConfig cfg;
  require(root.IsMap() || root.IsNull(), errc::bad_config, "config root must be a map");
  if (root.IsNull()) return cfg;
  detail::check_keys(root, "<root>",
                     {"mesh", "profile", "bloch", "solver", "packets", "hom", "dispersion",
                      "design", "validate"});

  const auto mesh = root["mesh"];
  detail::check_keys(mesh, "mesh", {"Rx", "n0"});
  detail::read(mesh, "Rx", cfg.Rx);
  detail::read(mesh, "n0", cfg.n0);

  const auto profile = root["profile"];
  detail::check_keys(profile, "profile", {"eps_s", "Rs"});
  detail::read(profile, "eps_s", cfg.eps_s);
  detail::read(profile, "Rs", cfg.Rs);

  const auto bloch = root["bloch"];
  detail::check_keys(bloch, "bloch", {"theta0"});
  detail::read(bloch, "theta0", cfg.theta0);

  const auto solver = root["solver"];
  detail::check_keys(solver, "solver", {"method", "omega_floor"});
  if (solver && solver["method"])
    cfg.method = detail::parse_method(solver["method"].as<std::string>());
  detail::read(solver, "omega_floor", cfg.omega_floor);

  const auto packets = root["packets"];
  detail::check_keys(packets, "packets",
                     {"x0", "dx0", "kappa0", "left_shape", "right_shape"});
  detail::read(packets, "x0", cfg.x0);
  detail::read(packets, "dx0", cfg.dx0);
  detail::read(packets, "kappa0", cfg.kappa0);
  if (packets && packets["left_shape"])
    cfg.left_shape = detail::parse_shape(packets["left_shape"].as<std::string>());
  if (packets && packets["right_shape"])
    cfg.right_shape = detail::parse_shape(packets["right_shape"].as<std::string>());

  const auto hom = root["hom"];
  detail::check_keys(hom, "hom", {"tau_span", "tau_count", "literal_b1"});
  detail::read(hom, "tau_span", cfg.tau_span);
  detail::read(hom, "tau_count", cfg.tau_count);
  detail::read(hom, "literal_b1", cfg.literal_b1);

  const auto dispersion = root["dispersion"];
  detail::check_keys(dispersion, "dispersion", {"bands", "theta_points"});
  detail::read(dispersion, "bands", cfg.bands);
  detail::read(dispersion, "theta_points", cfg.theta_points);

  const auto design = root["design"];
  detail::check_keys(design, "design", {"kappa_min", "kappa_max", "kappa_count"});
  detail::read(design, "kappa_min", cfg.kappa_min);
  detail::read(design, "kappa_max", cfg.kappa_max);
  detail::read(design, "kappa_count", cfg.kappa_count);

  const auto validate = root["validate"];
  detail::check_keys(validate, "validate",
                     {"seed", "ladder_cases", "closed_form_sets", "refinement_ladder",
                      "corrupt_modes"});
  detail::read(validate, "seed", cfg.seed);
  detail::read(validate, "ladder_cases", cfg.ladder_cases);
  detail::read(validate, "closed_form_sets", cfg.closed_form_sets);
  detail::read(validate, "refinement_ladder", cfg.refinement_ladder);
  detail::read(validate, "corrupt_modes", cfg.corrupt_modes);

  require(cfg.tau_count >= 1 && cfg.tau_span > 0, errc::bad_config, "bad hom tau grid");
  require(cfg.bands >= 1 && cfg.theta_points >= 1, errc::bad_config,
          "bad dispersion sweep");
  require(cfg.dx0 > 0 && cfg.x0 > 0, errc::bad_config, "bad packet geometry");
  return cfg;
}

inline RunConfig load_config(const std::string& path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const YAML::Exception& e) {
    throw Error(errc::bad_config, "cannot parse config '" + path + "': " + e.what());
  }
  try {
    return parse_config(root);
  } catch (const YAML::Exception& e) {
    throw Error(errc::bad_config, "bad value in config '" + path + "': " + e.what());
  }
}

}  // namespace qhelm

#endif
