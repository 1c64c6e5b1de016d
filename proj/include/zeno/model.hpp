#pragma once

// Physical parameters of the lambda system coupled to two oscillator modes,
// plus the validation gate every other module sits behind.
//
// Units: hbar = k_B = 1.  Frequencies, couplings, temperatures and detunings
// all share one angular-frequency unit; only ratios are physical.

#include <string>

#include "zeno/errors.hpp"

namespace zeno {

// Level layout: |1> is the initial (topmost) state, |2> intermediate, |3>
// bottom.  Oscillator a drives 1<->2, oscillator b drives 2<->3.
struct ModelParams {
  double omega1 = 0.0;  // level energies; only differences matter
  double omega2 = 0.0;
  double omega3 = 0.0;
  double omega_a = 1.0;      // > 0
  double omega_b = 1.0;      // > 0
  double g12 = 0.0;          // 1-2 coupling (sign irrelevant)
  double g23 = 0.0;          // 2-3 coupling
  double delta = 0.0;        // omega_b - (omega2 - omega3); 0 when resonant
  double temperature = 0.0;  // >= 0
};

enum class Mode { resonant, detuned };

// Numerical knobs shared across modules.  The caps guard runaway
// configurations (astronomical temperatures, huge mode counts) rather than
// physics.
struct Tolerances {
  double tail_mass = 1e-6;      // max Boltzmann weight discarded by truncation
  double eig_residual = 1e-10;  // max ||Hv - lambda v|| per block
  double epsilon = 0.1;         // default epsilon for bound evaluation
  long max_cutoff = 1'000'000;  // per-mode Fock cutoff cap
  long max_blocks = 10'000'000; // product-grid cap (multimode thermal sums)
  int max_dim = 4096;           // dense block dimension cap

  void check() const;  // throws DomainError on nonsense
};

// Proof token: the only way to obtain one is validate() below, so downstream
// code can assume the resonance bookkeeping already happened.  Immutable,
// safe to share across workers.
class ValidatedParams {
 public:
  const ModelParams& raw() const { return p_; }
  Mode mode() const { return mode_; }

  double omega_a() const { return p_.omega_a; }
  double omega_b() const { return p_.omega_b; }
  double g12() const { return p_.g12; }
  double g23() const { return p_.g23; }
  double delta() const { return mode_ == Mode::resonant ? 0.0 : p_.delta; }
  double temperature() const { return p_.temperature; }
  double omega1() const { return p_.omega1; }

 private:
  friend ValidatedParams validate(const ModelParams&, Mode);
  ValidatedParams(const ModelParams& p, Mode m) : p_(p), mode_(m) {}
  ModelParams p_;
  Mode mode_;
};

// Checks positivity and the Bohr-frequency identities for the declared mode:
//   resonant:  omega1-omega2 = omega_a  and  omega2-omega3 = omega_b
//   detuned:   omega1-omega2 = omega_a  and  delta = omega_b - (omega2-omega3)
// Identities are enforced to a relative 1e-12 so that parameters assembled
// from decimal input round-trip.  Throws NonPositiveFrequency or
// ResonanceViolation (the message names the identity and the mismatch).
ValidatedParams validate(const ModelParams& params, Mode mode);

// Convenience builders: choose level energies consistent with the requested
// splittings (omega3 = 0) so validate() accepts the result.
ModelParams make_resonant(double omega_a, double omega_b, double g12,
                          double g23, double temperature);
ModelParams make_detuned(double omega_a, double omega_b, double g12,
                         double g23, double delta, double temperature);

}  // namespace zeno
