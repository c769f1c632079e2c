#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <string>

#include "qhelm/cli.hpp"

extern "C" void openblas_set_num_threads(int);

int main(int argc, char** argv) {
  CLI::App app{"Bloch-periodic Helmholtz mode toolkit: eigenmodes, dispersion, "
               "slab design, and two-photon interference experiments"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::string method;
  bool no_timestamp = false;
  int threads = 0;
  app.add_option("--config", config_path, "configuration file (YAML)");
  app.add_option("--out", out_dir, "output directory for CSV/plot files");
  app.add_option("--method", method, "discretization override")
      ->check(CLI::IsMember({"fdm", "fem"}));
  app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp comment from CSVs");
  app.add_option("--threads", threads, "BLAS thread count");

  auto* modes = app.add_subcommand("modes", "solve one Bloch system, write modes.csv");
  auto* dispersion =
      app.add_subcommand("dispersion", "theta0 sweep vs transfer-matrix bands");
  auto* design = app.add_subcommand("design", "slab R/T/phase scan over kappa");
  auto* hom = app.add_subcommand("hom", "two-photon coincidence sweep");
  auto* validate = app.add_subcommand("validate", "run the numerical check suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (threads > 0) openblas_set_num_threads(threads);

  try {
    qhelm::cli::Options opt;
    if (!config_path.empty()) opt.cfg = qhelm::load_config(config_path);
    if (!method.empty()) opt.cfg.method = qhelm::detail::parse_method(method);
    opt.out = out_dir;
    opt.timestamp = !no_timestamp;
    std::filesystem::create_directories(opt.out);

    if (modes->parsed()) return qhelm::cli::cmd_modes(opt);
    if (dispersion->parsed()) return qhelm::cli::cmd_dispersion(opt);
    if (design->parsed()) return qhelm::cli::cmd_design(opt);
    if (hom->parsed()) return qhelm::cli::cmd_hom(opt);
    if (validate->parsed()) return qhelm::cli::cmd_validate(opt);
    return 2;
  } catch (const qhelm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code == qhelm::errc::bad_config ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
