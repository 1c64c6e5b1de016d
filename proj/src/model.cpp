#include "zeno/model.hpp"

#include <cmath>
#include <sstream>

namespace zeno {

void Tolerances::check() const {
  if (!(tail_mass > 0.0 && tail_mass < 1.0))
    throw DomainError("tail_mass must lie in (0,1), got " +
                      std::to_string(tail_mass));
  if (!(eig_residual > 0.0))
    throw DomainError("eig_residual must be > 0");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw DomainError("epsilon must lie in (0,1), got " +
                      std::to_string(epsilon));
  if (max_cutoff < 0 || max_blocks < 1 || max_dim < 3)
    throw DomainError("nonsensical cap configuration");
}

namespace {

// |lhs - rhs| within 1e-12 of the scale set by the operands.
bool close(double lhs, double rhs) {
  double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
  return std::abs(lhs - rhs) <= 1e-12 * scale;
}

[[noreturn]] void fail_identity(const char* what, double got, double want) {
  std::ostringstream os;
  os << "resonance identity violated: " << what << " = " << got
     << " but should equal " << want << " (off by " << got - want << ")";
  throw ResonanceViolation(os.str());
}

}  // namespace

ValidatedParams validate(const ModelParams& params, Mode mode) {
  if (!(params.omega_a > 0.0))
    throw NonPositiveFrequency("omega_a must be > 0, got " +
                               std::to_string(params.omega_a));
  if (!(params.omega_b > 0.0))
    throw NonPositiveFrequency("omega_b must be > 0, got " +
                               std::to_string(params.omega_b));
  if (!(params.temperature >= 0.0))
    throw DomainError("temperature must be >= 0, got " +
                      std::to_string(params.temperature));

  const double split12 = params.omega1 - params.omega2;
  const double split23 = params.omega2 - params.omega3;
  if (!close(split12, params.omega_a))
    fail_identity("omega1 - omega2", split12, params.omega_a);

  if (mode == Mode::resonant) {
    if (!close(split23, params.omega_b))
      fail_identity("omega2 - omega3", split23, params.omega_b);
    if (params.delta != 0.0)
      throw ResonanceViolation(
          "resonant mode requires delta = 0, got " +
          std::to_string(params.delta));
  } else {
    if (!close(params.delta, params.omega_b - split23))
      fail_identity("delta", params.delta, params.omega_b - split23);
  }
  return ValidatedParams(params, mode);
}

ModelParams make_resonant(double omega_a, double omega_b, double g12,
                          double g23, double temperature) {
  ModelParams p;
  p.omega3 = 0.0;
  p.omega2 = omega_b;
  p.omega1 = omega_b + omega_a;
  p.omega_a = omega_a;
  p.omega_b = omega_b;
  p.g12 = g12;
  p.g23 = g23;
  p.delta = 0.0;
  p.temperature = temperature;
  return p;
}

ModelParams make_detuned(double omega_a, double omega_b, double g12,
                         double g23, double delta, double temperature) {
  ModelParams p;
  p.omega3 = 0.0;
  p.omega2 = omega_b - delta;  // so delta = omega_b - (omega2 - omega3)
  p.omega1 = p.omega2 + omega_a;
  p.omega_a = omega_a;
  p.omega_b = omega_b;
  p.g12 = g12;
  p.g23 = g23;
  p.delta = delta;
  p.temperature = temperature;
  return p;
}

}  // namespace zeno
