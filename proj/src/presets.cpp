#include "zeno/presets.hpp"

#include <sstream>

namespace zeno {

namespace {

std::string temp_label(double t) {
  std::ostringstream os;
  os << "T" << t;
  return os.str();
}

FigureCurve resonant_curve(double omega_a, double omega_b, double g12,
                           double g23, double temperature,
                           double tail_mass = 1e-6) {
  return {temp_label(temperature),
          make_resonant(omega_a, omega_b, g12, g23, temperature),
          Mode::resonant, tail_mass};
}

FigureCurve detuned_curve(double omega_a, double omega_b, double g12,
                          double g23, double delta, double temperature,
                          const std::string& label) {
  return {label,
          make_detuned(omega_a, omega_b, g12, g23, delta, temperature),
          Mode::detuned, 1e-6};
}

}  // namespace

FigurePreset figure_preset(const std::string& name) {
  FigurePreset p;
  p.name = name;
  if (name == "fig2a") {
    for (double t : {0.1, 1.0, 50.0, 250.0})
      p.curves.push_back(resonant_curve(10, 1, 1, 1, t));
  } else if (name == "fig2b") {
    for (double t : {0.1, 1.0, 250.0})
      p.curves.push_back(resonant_curve(50, 1, 1, 1, t));
    p.curves.push_back(resonant_curve(50, 1, 1, 1, 1250.0, 1e-4));
  } else if (name == "fig3") {
    for (double t : {0.1, 250.0})
      p.curves.push_back(resonant_curve(1, 10, 1, 6, t));
  } else if (name == "fig4a") {
    for (double t : {0.1, 10.0, 100.0, 250.0}) {
      FigureCurve c = detuned_curve(10, 1, 1, 1, 1.0, t, temp_label(t));
      p.curves.push_back(c);
    }
  } else if (name == "fig4b") {
    for (double d : {0.0, 1.0, 2.0, 4.0}) {
      std::ostringstream os;
      os << "delta" << d;
      p.curves.push_back(detuned_curve(10, 1, 1, 1, d, 250.0, os.str()));
    }
  } else {
    throw DomainError("unknown preset '" + name +
                      "' (have fig2a, fig2b, fig3, fig4a, fig4b)");
  }
  return p;
}

std::vector<std::string> preset_names() {
  return {"fig2a", "fig2b", "fig3", "fig4a", "fig4b"};
}

}  // namespace zeno
