#pragma once

// Canned parameter sets for the reference survival-probability curves.  Each
// preset pins couplings, temperatures and (where relevant) detunings; the
// time grid always spans 20 periods of the unit frequency with 400 points,
// a reproduction choice documented in the README rather than measured data.

#include <string>
#include <vector>

#include "zeno/model.hpp"

namespace zeno {

struct FigureCurve {
  std::string label;  // goes into filenames: "T250", "delta2", ...
  ModelParams params;
  Mode mode = Mode::resonant;
  double tail_mass = 1e-6;  // the hottest fig2b curve relaxes this
};

struct FigurePreset {
  std::string name;
  std::vector<FigureCurve> curves;
  double t_max = 20.0;
  int points = 400;
};

// fig2a: omega_a=10, omega_b=1, g12=g23=1, T in {0.1, 1, 50, 250}
// fig2b: omega_a=50, omega_b=1, g12=g23=1, T in {0.1, 1, 250, 1250};
//        the T=1250 curve runs at tail_mass 1e-4
// fig3:  omega_a=1, omega_b=10, g12=1, g23=6, T in {0.1, 250}
// fig4a: omega_a=10, omega_b=1, g12=g23=1, delta=1, T in {0.1, 10, 100, 250}
// fig4b: omega_a=10, omega_b=1, g12=g23=1, T=250, delta in {0, 1, 2, 4}
// Throws DomainError on an unknown name.
FigurePreset figure_preset(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace zeno
