#pragma once

// Multimode generalization: p oscillators on the 1-2 transition and q on the
// 2-3 transition.  The conserved excitation count again splits the
// Hamiltonian into finite blocks; seen from |1, n_vec, m_vec> the invariant
// subspace is spanned by
//
//   index 0:            |1, n_vec, m_vec>
//   index 1+k:          |2, n_vec + e_k, m_vec>,            k = 0..p-1
//   index 1+p+k*q+l:    |3, n_vec + e_k, m_vec + e_l>,      l = 0..q-1
//
// of dimension 1+p+pq.  Couplings: alpha_k = g12_k sqrt(n_k+1) from index 0
// to 1+k, beta_kl = g23_l sqrt(m_l+1) from 1+k to 1+p+k*q+l; everything else
// vanishes.  The diagonal holds the free energies of those kets relative to
// the first one: delta_k = nu_k - bohr_12 and delta_k + (mu_l - bohr_23),
// where bohr_12 = omega1-omega2 and bohr_23 = omega2-omega3 (the removed
// common scalar is the energy of the index-0 ket).

#include <Eigen/Dense>

#include <limits>
#include <vector>

#include "zeno/model.hpp"
#include "zeno/thermal.hpp"

namespace zeno {

struct OscillatorMode {
  double frequency = 1.0;  // > 0
  double coupling = 0.0;
};

struct MultimodeSpec {
  std::vector<OscillatorMode> modes_12;  // nu_k, g12_k; k = 1..p
  std::vector<OscillatorMode> modes_23;  // mu_l, g23_l; l = 1..q
  double temperature = 0.0;
  // Atomic splittings omega1-omega2 and omega2-omega3.  NaN (the default)
  // means "resonant with the first mode of the respective family", which
  // makes the fully resonant configuration the zero-configuration default.
  double bohr_12 = std::numeric_limits<double>::quiet_NaN();
  double bohr_23 = std::numeric_limits<double>::quiet_NaN();
};

class ValidatedMultimodeSpec {
 public:
  const MultimodeSpec& raw() const { return s_; }
  int p() const { return int(s_.modes_12.size()); }
  int q() const { return int(s_.modes_23.size()); }
  double bohr_12() const { return bohr12_; }  // defaults resolved
  double bohr_23() const { return bohr23_; }
  double temperature() const { return s_.temperature; }

 private:
  friend ValidatedMultimodeSpec validate(const MultimodeSpec&);
  ValidatedMultimodeSpec(const MultimodeSpec& s, double b12, double b23)
      : s_(s), bohr12_(b12), bohr23_(b23) {}
  MultimodeSpec s_;
  double bohr12_;
  double bohr23_;
};

ValidatedMultimodeSpec validate(const MultimodeSpec& spec);

struct MultiBlockIndex {
  std::vector<long> n_vec;  // p occupations, >= 0
  std::vector<long> m_vec;  // q occupations, >= 0
};

struct MultiBlockMatrix {
  int p = 0;
  int q = 0;
  Eigen::MatrixXd mat;  // dense symmetric, dim = 1+p+pq

  int dim() const { return 1 + p + p * q; }
};

// Throws DimensionOverflow when 1+p+pq exceeds max_dim.
MultiBlockMatrix build_multiblock(const ValidatedMultimodeSpec& spec,
                                  const MultiBlockIndex& idx,
                                  int max_dim = 4096);

// |<e1| exp(-i t B) |e1>|^2 via dense symmetric eigensolve; in [0,1].
double survival_probability_multiblock(const MultiBlockMatrix& block,
                                       double t);

// All 1+p+pq populations after evolving |e1>; sums to 1 up to roundoff.
Eigen::VectorXd multiblock_populations(const MultiBlockMatrix& block,
                                       double t);

// Product of (cutoff+1) over all p+q modes at the given tolerances — the
// number of blocks a thermal average would evaluate.  Saturates at
// max_blocks + 1 rather than overflowing.
long multiblock_count(const ValidatedMultimodeSpec& spec,
                      const Tolerances& tol);

// Thermal average over all mode occupations (product ensemble, per-mode
// retained-mass target (1-tail_mass)^(1/(p+q))).  Canonical odometer order:
// the first 1-2 mode is the most significant digit, the last 2-3 mode the
// fastest.  Same determinism contract as the two-oscillator module; for
// p = q = 1 in the default resonant-1-2 configuration it reproduces
// survival_curve bit-for-bit.  Throws CutoffOverflow when the block count
// exceeds max_blocks.  Callers are expected to gate p > 1 runs behind
// multiblock_count — the grid grows multiplicatively.
SurvivalCurve thermal_survival(const ValidatedMultimodeSpec& spec,
                               const std::vector<double>& times,
                               const Tolerances& tol, int workers = 0);

// The p = 1 specialization the survival claims are about.  DomainError if
// p != 1; otherwise identical to thermal_survival.
SurvivalCurve thermal_survival_1xq(const ValidatedMultimodeSpec& spec,
                                   const std::vector<double>& times,
                                   const Tolerances& tol, int workers = 0);

}  // namespace zeno
