// Acceptance gate: one pass/fail line per criterion, exit 0 only if all hold.
// Informational "note:" lines carry context but never affect the verdict.

#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <vector>

#include "qhelm/hom.hpp"
#include "qhelm/validate.hpp"

using namespace qhelm;

namespace {

int failures = 0;

const char* verdict(bool ok) {
  if (!ok) ++failures;
  return ok ? "PASS" : "FAIL";
}

template <class F>
void criterion(const char* tag, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    ++failures;
    std::printf("FAIL %s exception: %s\n", tag, e.what());
  }
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);

  criterion("c1", [] {
    const SlabResponse r = slab_rt(7.0, 6e-3, 560.0);
    const double R2 = std::norm(r.R), T2 = std::norm(r.T);
    const double ph = phase_diff_deg(r);
    const bool ok = std::abs(R2 - 0.4987) <= 5e-4 && std::abs(T2 - 0.5013) <= 5e-4 &&
                    std::abs(ph + 89.16) <= 0.1;
    std::printf(
        "%s c1 slab_design_point kappa=560: R2 = %.6f T2 = %.6f dphase = %.4f deg "
        "(targets 0.4987 / 0.5013 / -89.16, tol 5e-4 / 5e-4 / 0.1)\n",
        verdict(ok), R2, T2, ph);
    const SlabResponse r5 = slab_rt(7.0, 6e-3, 526.0);
    std::printf(
        "note: c1 the stated targets hold at kappa=526 (the dip carrier): R2 = %.6f "
        "T2 = %.6f dphase = %.4f deg; |R|^2 at 560 is reference-convention-free, so no "
        "phase convention can move it\n",
        std::norm(r5.R), std::norm(r5.T), phase_diff_deg(r5));
  });

  criterion("c2", [] {
    const SystemSpec thick;  // Rx=3, n0=501, eps_s=20, Rs=0.3, theta0=pi/2
    const OrthonormalityReport f = orthonormality_check(thick, Method::FDM);
    const OrthonormalityReport e = orthonormality_check(thick, Method::FEM);
    const double worst = std::max({f.max_offdiag, f.max_diag_dev, e.max_offdiag, e.max_diag_dev});
    std::printf(
        "%s c2 mass_orthonormality fdm = %.3g fem = %.3g (tol 1e-10)\n",
        verdict(worst <= 1e-10), std::max(f.max_offdiag, f.max_diag_dev),
        std::max(e.max_offdiag, e.max_diag_dev));
  });

  criterion("c3", [] {
    const SystemSpec thick;
    const double fdm = dispersion_check(thick, Method::FDM, 4, 32);
    const double fem = dispersion_check(thick, Method::FEM, 4, 32);
    std::printf(
        "%s c3 dispersion_vs_transfer_matrix worst rel omega: fdm = %.3g fem = %.3g "
        "(4 bands, 32 interior theta0 points, tol 1e-2)\n",
        verdict(fdm < 1e-2 && fem < 1e-2), fdm, fem);
  });

  // Criteria 4-6 share the default quantum-beam-splitter rig (FEM, n0=2501);
  // criterion 5's refined clause re-solves on n0=5001.
  criterion("c4-c6", [] {
    const HomConfig rig;  // defaults are the balanced-slab configuration
    const HomCases cases = run_hom_cases(rig);

    const bool ok4 = cases.a.dip < 0.1 * cases.a.baseline && cases.a.dip < 0.5;
    std::printf(
        "%s c4 hom_dip g2(0) = %.4g baseline = %.6f (needs < 0.1*baseline and < 0.5)\n",
        verdict(ok4), cases.a.dip, cases.a.baseline);

    HomConfig fine = rig;
    fine.n0 = 5001;
    const CorrelationCurve refined = run_hom(fine);
    const bool ok5_default = cases.a.visibility >= 0.90;
    const bool ok5_refined = refined.visibility >= 0.9335 && refined.visibility <= 0.9713;
    std::printf(
        "%s c5 hom_visibility refined(n0=5001) = %.4f%% target [93.35, 97.13]; "
        "default(n0=2501) = %.4f%% (needs >= 90)\n",
        verdict(ok5_default && ok5_refined), 100 * refined.visibility,
        100 * cases.a.visibility);
    std::printf(
        "note: c5 aligned-mesh visibility ladder 2501/3001/3501/4001/4501/5001 = "
        "99.09 / 98.77 / 98.48 / 98.23 / 98.02 / %.2f %%; Richardson extrapolation in "
        "dx^2 gives a continuum limit ~97.14%%, the upper edge of the target window, "
        "approached from above -- no feasible mesh lands inside the interval\n",
        100 * refined.visibility);

    std::vector<double> tau, g2;
    for (const auto& pt : cases.a.points) {
      tau.push_back(pt.tau);
      g2.push_back(pt.g2);
    }
    const double r2 = gaussian_dip_r2(tau, g2);
    const double rel = std::abs(cases.c.visibility - cases.a.visibility) / cases.a.visibility;
    std::printf(
        "%s c6 packet_shape_cases vis A = %.4f%% C = %.4f%% rel diff = %.3g "
        "(tol 0.15); gaussian fit R^2(A) = %.5f (needs > 0.95)\n",
        verdict(rel <= 0.15 && r2 > 0.95), 100 * cases.a.visibility,
        100 * cases.c.visibility, rel, r2);
    std::printf("note: c6 case B (Lorentzian pair) dips at tau = 0 as well: g2(0) = %.4g "
                "baseline = %.4f\n",
                cases.b.dip, cases.b.baseline);
  });

  criterion("c7", [] {
    const double ladder = ladder_oracle_check(20250817ull, 1000);
    const double closed = closed_form_check(20250818ull, 100);
    std::printf(
        "%s c7 ladder_engine worst vs dense Fock oracle = %.3g (1000 cases); "
        "worst vs closed forms = %.3g (100 sets) (tol 1e-10)\n",
        verdict(ladder <= 1e-10 && closed <= 1e-10), ladder, closed);
  });

  criterion("c8", [] {
    const StokesCheck s = stokes_check(20250819ull, 200);
    std::printf(
        "%s c8 beam_splitter_algebra pair amplitudes off by %.3g; norm drift = %.3g "
        "over 200 random kets (tol 1e-12)\n",
        verdict(s.pair_error <= 1e-12 && s.norm_deviation <= 1e-12), s.pair_error,
        s.norm_deviation);
  });

  criterion("c9", [] {
    const std::vector<int> ladder{201, 401, 801};
    const double sf = convergence_slope(1.5, M_PI / 2, ladder, Method::FDM);
    const double se = convergence_slope(1.5, M_PI / 2, ladder, Method::FEM);
    const SystemSpec thick;
    const double tr = std::max(time_reversal_check(thick, Method::FDM),
                               time_reversal_check(thick, Method::FEM));
    std::printf(
        "%s c9 convergence slope fdm = %.4f fem = %.4f (target 2.0 +- 0.2); "
        "time-reversal spectrum gap = %.3g (tol 1e-9)\n",
        verdict(std::abs(sf - 2.0) <= 0.2 && std::abs(se - 2.0) <= 0.2 && tr <= 1e-9),
        sf, se, tr);
  });

  std::printf("acceptance: %d of 9 criteria pass\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
