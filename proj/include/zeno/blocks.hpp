#pragma once

// The 3x3 invariant-subspace blocks and their exact evolution.
//
// Conservation of the excitation number splits the full Hamiltonian into 3x3
// blocks indexed by the oscillator occupations (n_a, n_b) seen from the
// initial state.  After removing the scalar diagonal shift each block is
//
//        [ 0      a_eff   0     ]
//   H =  [ a_eff  0       b_eff ],   a_eff = |g12| sqrt(n_a+1),
//        [ 0      b_eff   delta ]    b_eff = |g23| sqrt(n_b+1),
//
// and the survival amplitude of |e1> is a three-term spectral sum.  Resonant
// blocks (delta = 0) have the closed-form spectrum {-G, 0, +G} with
// G = sqrt(a_eff^2 + b_eff^2); detuned blocks go through the analytic cubic.
// Everything here is a pure function: safe for unlimited data parallelism.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "zeno/detail/cubic.hpp"
#include "zeno/errors.hpp"
#include "zeno/model.hpp"

namespace zeno {

struct BlockIndex {
  long n_a = 0;
  long n_b = 0;
};

template <class S = double>
struct BlockMatrix {
  S a_eff{};  // >= 0
  S b_eff{};  // >= 0
  S delta{};  // (3,3) entry; 0 in the resonant case
  S shift{};  // removed scalar n_a*omega_a + n_b*omega_b + omega1

  Eigen::Matrix<S, 3, 3> matrix() const {
    Eigen::Matrix<S, 3, 3> h;
    h << S(0), a_eff, S(0),
         a_eff, S(0), b_eff,
         S(0), b_eff, delta;
    return h;
  }
};

inline BlockMatrix<double> build_block(const ValidatedParams& params,
                                       BlockIndex idx) {
  if (idx.n_a < 0 || idx.n_b < 0)
    throw DomainError("block index must be nonnegative, got (" +
                      std::to_string(idx.n_a) + "," + std::to_string(idx.n_b) +
                      ")");
  BlockMatrix<double> b;
  b.a_eff = std::abs(params.g12()) * std::sqrt(double(idx.n_a) + 1.0);
  b.b_eff = std::abs(params.g23()) * std::sqrt(double(idx.n_b) + 1.0);
  b.delta = params.delta();
  b.shift = double(idx.n_a) * params.omega_a() +
            double(idx.n_b) * params.omega_b() + params.omega1();
  if (!std::isfinite(b.a_eff) || !std::isfinite(b.b_eff) ||
      !std::isfinite(b.shift))
    throw DomainError("block index overflows double arithmetic");
  return b;
}

// Eigenvalues ascending plus the survival weights w_i = |<e1|v_i>|^2.
// This is all the evolution of |e1> needs; full eigenvectors live in
// eigensystem() below.
template <class S>
struct SpectralWeights {
  std::array<S, 3> lambda{};
  std::array<S, 3> weight{};
};

namespace detail {

// Core spectral computation in terms of the squared couplings (the thermal
// sums precompute those without any square root; both the two-oscillator and
// the multimode paths must feed bit-identical a2/b2 here).
template <class S>
SpectralWeights<S> spectral_from_squares(S a2, S b2, S d) {
  SpectralWeights<S> out;

  if (d == S(0)) {
    const S g2 = a2 + b2;
    if (g2 == S(0)) {
      out.lambda = {S(0), S(0), S(0)};
      out.weight = {S(1), S(0), S(0)};
      return out;
    }
    const S g = std::sqrt(g2);
    out.lambda = {-g, S(0), g};
    out.weight = {a2 / (S(2) * g2), b2 / g2, a2 / (S(2) * g2)};
    return out;
  }

  if (a2 == S(0)) {
    // |e1> decoupled: weight sits on the exact zero eigenvalue.
    const S disc = std::sqrt(d * d + S(4) * b2);
    std::array<std::pair<S, S>, 3> lw{{{S(0), S(1)},
                                       {(d - disc) / S(2), S(0)},
                                       {(d + disc) / S(2), S(0)}}};
    std::sort(lw.begin(), lw.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (int i = 0; i < 3; ++i) {
      out.lambda[i] = lw[i].first;
      out.weight[i] = lw[i].second;
    }
    return out;
  }

  if (b2 == S(0)) {
    // 2x2 resonant pair plus the spectator level at delta.
    const S a = std::sqrt(a2);
    std::array<std::pair<S, S>, 3> lw{
        {{-a, S(0.5)}, {a, S(0.5)}, {d, S(0)}}};
    std::sort(lw.begin(), lw.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (int i = 0; i < 3; ++i) {
      out.lambda[i] = lw[i].first;
      out.weight[i] = lw[i].second;
    }
    return out;
  }

  // General case: a,b > 0 makes the matrix unreduced tridiagonal, so the
  // eigenvalues are simple and the residue formula is safe:
  //   w_i = q(lambda_i) / p'(lambda_i),  q(x) = x(x-d) - b^2
  // (numerator = cofactor of the (1,1) entry of xI - H).
  out.lambda = tridiag_cubic_roots(a2, b2, d);
  for (int i = 0; i < 3; ++i) {
    const S x = out.lambda[i];
    const S dp = eval_cubic_deriv(a2, b2, d, x);
    if (dp == S(0))
      throw ConvergenceFailure("repeated eigenvalue in residue weights");
    out.weight[i] = (x * (x - d) - b2) / dp;
  }
  return out;
}

// Squared effective coupling g^2 (n+1).  The one canonical expression both
// thermal loops use, so their results can be compared bitwise.
inline double eff_sq(double g, long n) { return (g * g) * (double(n) + 1.0); }

}  // namespace detail

template <class S>
SpectralWeights<S> spectral_weights(const BlockMatrix<S>& blk) {
  return detail::spectral_from_squares(blk.a_eff * blk.a_eff,
                                       blk.b_eff * blk.b_eff, blk.delta);
}

template <class S>
struct EigenSystem3 {
  Eigen::Matrix<S, 3, 1> values;   // ascending
  Eigen::Matrix<S, 3, 3> vectors;  // orthonormal columns, values order
};

namespace detail {

// Deterministic sign: flip so the largest-magnitude component is positive.
template <class S>
void canonical_sign(Eigen::Matrix<S, 3, 1>& v) {
  int imax = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
  if (v[imax] < S(0)) v = -v;
}

}  // namespace detail

template <class S>
EigenSystem3<S> eigensystem(const BlockMatrix<S>& blk,
                            S eig_residual = S(1e-10)) {
  const S a = blk.a_eff, b = blk.b_eff, d = blk.delta;
  EigenSystem3<S> es;

  if (a == S(0) && b == S(0)) {
    // Diagonal: eigenvalues {0, 0, d}; basis vectors in index order within
    // the degenerate pair keeps the output lexicographically deterministic.
    std::array<std::pair<S, int>, 3> li{{{S(0), 0}, {S(0), 1}, {d, 2}}};
    std::stable_sort(li.begin(), li.end(), [](const auto& x, const auto& y) {
      return x.first < y.first;
    });
    es.vectors.setZero();
    for (int i = 0; i < 3; ++i) {
      es.values[i] = li[i].first;
      es.vectors(li[i].second, i) = S(1);
    }
    return es;
  }

  if (d == S(0)) {
    // Exact resonant spectrum {-G, 0, +G}.
    const S g = std::sqrt(a * a + b * b);
    const S rt2 = std::sqrt(S(2));
    es.values << -g, S(0), g;
    es.vectors.col(0) << a / (rt2 * g), -S(1) / rt2, b / (rt2 * g);
    es.vectors.col(1) << b / g, S(0), -a / g;
    es.vectors.col(2) << a / (rt2 * g), S(1) / rt2, b / (rt2 * g);
    return es;
  }

  const auto roots = detail::tridiag_cubic_roots(a * a, b * b, d);
  const Eigen::Matrix<S, 3, 3> h = blk.matrix();
  for (int i = 0; i < 3; ++i) {
    es.values[i] = roots[i];
    // Null vector of (H - lambda): the largest cross product of two rows is
    // well conditioned whenever the eigenvalue is simple.
    Eigen::Matrix<S, 3, 3> m = h;
    m.diagonal().array() -= roots[i];
    const Eigen::Matrix<S, 3, 1> c01 = m.row(0).cross(m.row(1));
    const Eigen::Matrix<S, 3, 1> c02 = m.row(0).cross(m.row(2));
    const Eigen::Matrix<S, 3, 1> c12 = m.row(1).cross(m.row(2));
    Eigen::Matrix<S, 3, 1> v = c01;
    if (c02.squaredNorm() > v.squaredNorm()) v = c02;
    if (c12.squaredNorm() > v.squaredNorm()) v = c12;
    const S n = v.norm();
    if (n == S(0))
      throw ConvergenceFailure("eigenvector cross products all vanish");
    v /= n;
    detail::canonical_sign(v);
    es.vectors.col(i) = v;
  }

  const S scale = std::max(h.norm(), S(1));
  for (int i = 0; i < 3; ++i) {
    const S res = (h * es.vectors.col(i) - es.values[i] * es.vectors.col(i))
                      .norm();
    if (res > eig_residual * scale)
      throw ConvergenceFailure("eigenpair residual " + std::to_string(res) +
                               " exceeds tolerance");
  }
  return es;
}

// <e1| exp(-i t H) |e1> for the shift-removed block.
template <class S>
std::complex<S> survival_amplitude(const BlockMatrix<S>& blk, S t) {
  if (blk.delta == S(0)) {
    const S a2 = blk.a_eff * blk.a_eff, b2 = blk.b_eff * blk.b_eff;
    const S g2 = a2 + b2;
    if (g2 == S(0)) return {S(1), S(0)};
    // spectral sum over {0, +-G} collapses to a single cosine, and the
    // +-G weights are equal so the imaginary parts cancel exactly
    return {(b2 + a2 * std::cos(std::sqrt(g2) * t)) / g2, S(0)};
  }
  const auto sw = spectral_weights(blk);
  std::complex<S> amp{};
  for (int i = 0; i < 3; ++i) {
    amp += sw.weight[i] *
           std::complex<S>{std::cos(sw.lambda[i] * t),
                           -std::sin(sw.lambda[i] * t)};
  }
  return amp;
}

// |amplitude|^2 expanded into the three-cosine pair form; clamped to [0,1].
template <class S>
S survival_probability_block(const SpectralWeights<S>& sw, S t) {
  const auto& w = sw.weight;
  const auto& l = sw.lambda;
  S p = w[0] * w[0] + w[1] * w[1] + w[2] * w[2] +
        S(2) * (w[0] * w[1] * std::cos((l[0] - l[1]) * t) +
                w[0] * w[2] * std::cos((l[0] - l[2]) * t) +
                w[1] * w[2] * std::cos((l[1] - l[2]) * t));
  return std::clamp(p, S(0), S(1));
}

template <class S>
S survival_probability_block(const BlockMatrix<S>& blk, S t) {
  if (blk.delta == S(0)) {
    const S a2 = blk.a_eff * blk.a_eff, b2 = blk.b_eff * blk.b_eff;
    const S g2 = a2 + b2;
    if (g2 == S(0)) return S(1);
    const S amp = (b2 + a2 * std::cos(std::sqrt(g2) * t)) / g2;
    return std::clamp(amp * amp, S(0), S(1));
  }
  return survival_probability_block(spectral_weights(blk), t);
}

// Populations of the three basis states after evolving |e1>; they sum to 1
// up to roundoff (unitarity).
template <class S>
std::array<S, 3> populations(const BlockMatrix<S>& blk, S t,
                             S eig_residual = S(1e-10)) {
  const auto es = eigensystem(blk, eig_residual);
  std::array<S, 3> out{};
  for (int j = 0; j < 3; ++j) {
    std::complex<S> amp{};
    for (int i = 0; i < 3; ++i) {
      const S c = es.vectors(j, i) * es.vectors(0, i);
      amp += c * std::complex<S>{std::cos(es.values[i] * t),
                                 -std::sin(es.values[i] * t)};
    }
    out[j] = std::norm(amp);
  }
  return out;
}

}  // namespace zeno
