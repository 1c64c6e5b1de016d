#pragma once

// Thermal ensemble over the oscillator occupations and the ensemble-averaged
// survival probability P1(t).
//
// Each oscillator contributes geometric Boltzmann weights (1-r) r^n with
// r = exp(-omega/T); the product ensemble is truncated so the total discarded
// weight stays below tail_mass, certified analytically from the geometric
// tail.  The double sum over (n_a, n_b) then averages the per-block survival
// probabilities of module blocks.

#include <vector>

#include "zeno/model.hpp"
#include "zeno/provenance.hpp"

namespace zeno {

// Truncated geometric weights of one oscillator mode.
struct ModeWeights {
  std::vector<double> weights;  // (1-r) r^n, n = 0..cutoff
  long cutoff = 0;
  double retained = 1.0;  // 1 - r^(cutoff+1), analytic
};

// Smallest cutoff whose retained mass reaches retain_target (certified by
// direct re-check, not just the logarithm estimate).  T = 0 collapses to the
// single weight {1}.  Throws CutoffOverflow past max_cutoff.
ModeWeights boltzmann_weights(double omega, double temperature,
                              double retain_target, long max_cutoff);

// Per-mode retained-mass target (1-tail_mass)^(1/n_modes); n_modes = 2 is
// kept as sqrt so the multimode q=1 path reproduces the two-oscillator
// ensemble bit-for-bit.
double per_mode_retain_target(double tail_mass, int n_modes);

struct ThermalEnsemble {
  std::vector<double> weights_a;
  std::vector<double> weights_b;
  long cutoff_a = 0;
  long cutoff_b = 0;
  double discarded_mass = 0.0;  // 1 - retained_a * retained_b
};

// Per-mode retained-mass target sqrt(1 - tail_mass): the product of the two
// retained masses then certifies discarded_mass <= tail_mass.
ThermalEnsemble build_ensemble(const ValidatedParams& params,
                               const Tolerances& tol);

struct SurvivalCurve {
  std::vector<double> times;
  std::vector<double> p1;
  Provenance metadata;
};

// t_j = t_max * j/(points-1), exactly affine so the hot loop's rotation
// recurrence applies.  points >= 2.
std::vector<double> uniform_times(double t_max, int points);

// P1(t_j) = sum_{n_a <= cutoff_a} sum_{n_b <= cutoff_b} w_a w_b P_block(t_j).
// Deterministic across runs and worker counts (fixed-chunk compensated
// reduction in canonical block order: n_a outer, n_b inner, both ascending).
// workers <= 0 picks the hardware concurrency.
SurvivalCurve survival_curve(const ValidatedParams& params,
                             const std::vector<double>& times,
                             const Tolerances& tol, int workers = 0);

}  // namespace zeno
