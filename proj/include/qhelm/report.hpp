#ifndef QHELM_REPORT_HPP
#define QHELM_REPORT_HPP

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

#include "qhelm/errors.hpp"

namespace qhelm {

inline std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Plain CSV emitter.  Numeric cells carry full round-trip precision so outputs
// diff cleanly across runs; the only run-dependent byte is the optional
// timestamp comment, which --no-timestamp drops.
class CsvFile {
 public:
  CsvFile(const std::filesystem::path& path, bool timestamp) : out_(path) {
    require(out_.good(), errc::bad_config, "cannot open '" + path.string() + "' for writing");
    if (timestamp) {
      const auto now = std::chrono::system_clock::now();
      const std::time_t t = std::chrono::system_clock::to_time_t(now);
      char buf[64];
      std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
      out_ << "# generated " << buf << "\n";
    }
  }

  void header(std::initializer_list<const char*> cols) {
    bool first = true;
    for (const char* c : cols) {
      if (!first) out_ << ",";
      out_ << c;
      first = false;
    }
    out_ << "\n";
  }

  void row(std::initializer_list<double> vals) {
    bool first = true;
    for (double v : vals) {
      if (!first) out_ << ",";
      out_ << format_full(v);
      first = false;
    }
    out_ << "\n";
  }

  void comment(const std::string& text) { out_ << "# " << text << "\n"; }

 private:
  std::ofstream out_;
};

inline void write_text_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path);
  require(out.good(), errc::bad_config, "cannot open '" + path.string() + "' for writing");
  out << body;
}

inline const char* hom_plot_script() {
  return R"PY(#!/usr/bin/env python3
# Coincidence curve from hom.csv (run next to the CSV).
import csv, sys
from pathlib import Path

import matplotlib.pyplot as plt

path = Path(sys.argv[1] if len(sys.argv) > 1 else "hom.csv")
dx0, g2 = [], []
with path.open() as f:
    for line in f:
        if line.startswith("#") or line.startswith("tau_s"):
            continue
        cells = line.strip().split(",")
        if len(cells) == 3:
            dx0.append(float(cells[1]))
            g2.append(float(cells[2]))

plt.figure(figsize=(5, 3.4))
plt.plot([d * 1e2 for d in dx0], g2, "o-", ms=3)
plt.axhline(0.5, ls="--", c="gray", lw=0.8)
plt.xlabel(r"$\delta x_0$ (cm)")
plt.ylabel(r"$g^{(2)}$")
plt.tight_layout()
plt.savefig(path.with_suffix(".png"), dpi=160)
print("wrote", path.with_suffix(".png"))
)PY";
}

inline const char* dispersion_plot_script() {
  return R"PY(#!/usr/bin/env python3
# Folded band structure: numeric eigensolve (dots) against the transfer-matrix
# dispersion (crosses).  Run next to the two CSVs.
import csv, sys
from pathlib import Path

import matplotlib.pyplot as plt

out = Path(".")

def load(name):
    ks, ws = [], []
    with (out / name).open() as f:
        for line in f:
            if line.startswith("#") or line.startswith("theta0"):
                continue
            cells = line.strip().split(",")
            if len(cells) == 4:
                ks.append(float(cells[1]))
                ws.append(float(cells[2]))
    return ks, ws

kn, wn = load("dispersion_numeric.csv")
kt, wt = load("dispersion_tmm.csv")
plt.figure(figsize=(4.6, 3.8))
plt.plot(kn, wn, ".", ms=4, label="numeric")
plt.plot(kt, wt, "x", ms=4, label="transfer matrix")
plt.xlabel(r"$\kappa$ (rad/m)")
plt.ylabel(r"$\omega$ (rad/s)")
plt.legend()
plt.tight_layout()
plt.savefig(out / "dispersion.png", dpi=160)
print("wrote", out / "dispersion.png")
)PY";
}

}  // namespace qhelm

#endif
