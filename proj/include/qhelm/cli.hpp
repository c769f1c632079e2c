#ifndef QHELM_CLI_HPP
#define QHELM_CLI_HPP

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "qhelm/config.hpp"
#include "qhelm/hom.hpp"
#include "qhelm/report.hpp"
#include "qhelm/validate.hpp"

namespace qhelm::cli {

struct Options {
  RunConfig cfg;
  std::filesystem::path out = ".";
  bool timestamp = true;
};

inline SystemSpec system_of(const RunConfig& cfg) {
  return {cfg.Rx, cfg.n0, cfg.eps_s, cfg.Rs, cfg.theta0};
}

inline int cmd_modes(const Options& opt) {
  const auto& cfg = opt.cfg;
  const auto system = std::make_shared<const BlochSystem>(
      build_system(system_of(cfg), cfg.method));
  const ModeBasis basis =
      cfg.omega_floor > 0 ? solve_modes(system, cfg.omega_floor) : solve_modes(system);
  const Eigen::VectorXd residual = mode_residuals(basis);

  CsvFile modes(opt.out / "modes.csv", opt.timestamp);
  modes.header({"p", "kappa_rad_per_m", "omega_rad_per_s", "residual"});
  for (int i = 0; i < basis.omega.size(); ++i)
    modes.row({double(basis.p_labels[i]), basis.kappa[i], basis.omega[i], residual[i]});

  const OrthonormalityReport on = check_orthonormality(basis);
  CsvFile ortho(opt.out / "orthonormality.csv", opt.timestamp);
  ortho.header({"max_offdiag", "max_diag_dev"});
  ortho.row({on.max_offdiag, on.max_diag_dev});
  std::cout << "modes: " << basis.omega.size() << " kept, orthonormality offdiag "
            << format_full(on.max_offdiag) << ", diag dev " << format_full(on.max_diag_dev)
            << "\n";
  return 0;
}

inline int cmd_dispersion(const Options& opt) {
  const auto& cfg = opt.cfg;
  require(cfg.theta_points >= 1, errc::bad_config, "empty theta0 sweep");
  CsvFile numeric(opt.out / "dispersion_numeric.csv", opt.timestamp);
  CsvFile tmm(opt.out / "dispersion_tmm.csv", opt.timestamp);
  numeric.header({"theta0_rad", "kappa_rad_per_m", "omega_rad_per_s", "band"});
  tmm.header({"theta0_rad", "kappa_rad_per_m", "omega_rad_per_s", "band"});
  double worst = 0;
  for (int j = 0; j < cfg.theta_points; ++j) {
    SystemSpec spec = system_of(cfg);
    spec.theta0 = (j + 0.5) * M_PI / cfg.theta_points;
    const ModeBasis basis = solve_modes(build_system(spec, cfg.method));
    const double kappa = spec.theta0 / cfg.Rx;
    for (int b = 0; b < cfg.bands && b < basis.omega.size(); ++b) {
      numeric.row({spec.theta0, kappa, basis.omega[b], double(b)});
      const double ref = tmm_band_omega(cfg.eps_s, cfg.Rs, cfg.Rx, spec.theta0, b);
      tmm.row({spec.theta0, kappa, ref, double(b)});
      worst = std::max(worst, std::abs(basis.omega[b] - ref) / ref);
    }
  }
  write_text_file(opt.out / "dispersion_plot.py", dispersion_plot_script());
  std::cout << "dispersion: " << cfg.theta_points << " theta0 points, " << cfg.bands
            << " bands, worst relative gap " << format_full(worst) << "\n";
  return 0;
}

inline int cmd_design(const Options& opt) {
  const auto& cfg = opt.cfg;
  const auto table =
      design_scan(cfg.eps_s, cfg.Rs, cfg.kappa_min, cfg.kappa_max, cfg.kappa_count);
  CsvFile out(opt.out / "design.csv", opt.timestamp);
  out.header({"kappa", "R2", "T2", "phase_diff_deg"});
  for (const SlabResponse& r : table)
    out.row({r.kappa, std::norm(r.R), std::norm(r.T), phase_diff_deg(r)});
  std::cout << "design: " << table.size() << " rows\n";
  return 0;
}

inline int cmd_hom(const Options& opt) {
  const HomConfig hom = opt.cfg.hom();
  const CorrelationCurve curve = run_hom(hom);
  CsvFile out(opt.out / "hom.csv", opt.timestamp);
  out.header({"tau_s", "delta_x0_m", "g2"});
  const double c = si.c();
  for (const auto& pt : curve.points) out.row({pt.tau, pt.tau * c, pt.g2});
  out.comment("summary visibility=" + format_full(curve.visibility) +
              " baseline=" + format_full(curve.baseline) +
              " dip=" + format_full(curve.dip));
  write_text_file(opt.out / "hom_plot.py", hom_plot_script());
  std::cout << "hom: visibility " << format_full(curve.visibility) << ", baseline "
            << format_full(curve.baseline) << ", dip " << format_full(curve.dip) << "\n";
  return 0;
}

inline int cmd_validate(const Options& opt) {
  const auto& cfg = opt.cfg;
  const SystemSpec spec = system_of(cfg);
  bool all = true;
  auto line = [&](const char* name, bool pass, double observed, const char* what) {
    all = all && pass;
    std::printf("%s  %-28s %s = %.3e\n", pass ? "PASS" : "FAIL", name, what, observed);
  };

  for (Method m : {Method::FDM, Method::FEM}) {
    const char* tag = m == Method::FDM ? "orthonormality/fdm" : "orthonormality/fem";
    const OrthonormalityReport on = orthonormality_check(spec, m, cfg.corrupt_modes);
    line(tag, on.max_offdiag <= 1e-10 && on.max_diag_dev <= 1e-10,
         std::max(on.max_offdiag, on.max_diag_dev), "worst defect");
  }
  {
    const double worst = dispersion_check(spec, cfg.method, cfg.bands, cfg.theta_points);
    line("dispersion_vs_tmm", worst < 0.01, worst, "worst rel omega");
  }
  {
    const double worst = ladder_oracle_check(cfg.seed, cfg.ladder_cases);
    line("ladder_vs_fock_oracle", worst <= 1e-10, worst, "worst rel dev");
  }
  {
    const double worst = closed_form_check(cfg.seed + 1, cfg.closed_form_sets);
    line("closed_forms", worst <= 1e-10, worst, "worst rel dev");
  }
  {
    const StokesCheck sc = stokes_check(cfg.seed + 2, 100);
    line("stokes_two_photon", sc.pair_error <= 1e-12, sc.pair_error, "worst amp err");
    line("stokes_norm", sc.norm_deviation <= 1e-12, sc.norm_deviation, "worst norm dev");
  }
  {
    const double worst = time_reversal_check(spec, cfg.method);
    line("time_reversal", worst <= 1e-9, worst, "worst rel gap");
  }
  {
    const double slope =
        convergence_slope(cfg.Rx, cfg.theta0, cfg.refinement_ladder, cfg.method);
    line("convergence_order", std::abs(slope - 2.0) <= 0.2, slope, "slope");
  }
  std::cout << (all ? "validate: PASS" : "validate: FAIL") << "\n";
  return all ? 0 : 1;
}

}  // namespace qhelm::cli

#endif
