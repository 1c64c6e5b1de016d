#pragma once

// Per-block curve accumulation shared by the two-oscillator and multimode
// thermal sums: adds wgt * P_block(t_j) into the compensated accumulator for
// every grid point.  Affine grids use the rotation recurrence; arbitrary
// grids fall back to libm.

#include <cmath>
#include <cstddef>
#include <vector>

#include "zeno/blocks.hpp"
#include "zeno/detail/timegrid.hpp"
#include "zeno/reduce.hpp"

namespace zeno::detail {

// Resonant block in squared-coupling form: P = ((b2 + a2 cos(G t))/G^2)^2.
inline void add_resonant_curve(double a2, double b2, double wgt,
                               const TimeGrid& grid, CompensatedVector& acc) {
  const auto& t = *grid.times;
  const double g2 = a2 + b2;
  if (g2 == 0.0) {
    for (std::size_t j = 0; j < t.size(); ++j) acc.add(j, wgt);
    return;
  }
  const double g = std::sqrt(g2);
  const double inv = 1.0 / g2;
  if (grid.affine) {
    Rotation r;
    r.init(g, grid.t0, grid.dt);
    for (std::size_t j = 0; j < t.size(); ++j) {
      const double amp = (b2 + a2 * r.c) * inv;
      acc.add(j, wgt * (amp * amp));
      r.step();
    }
  } else {
    for (std::size_t j = 0; j < t.size(); ++j) {
      const double amp = (b2 + a2 * std::cos(g * t[j])) * inv;
      acc.add(j, wgt * (amp * amp));
    }
  }
}

// Detuned block via its spectral weights, pair form:
// P = sum w_i^2 + 2 sum_{i<j} w_i w_j cos((l_i - l_j) t).
inline void add_spectral_curve(const SpectralWeights<double>& sw, double wgt,
                               const TimeGrid& grid, CompensatedVector& acc) {
  const auto& t = *grid.times;
  const auto& w = sw.weight;
  const auto& l = sw.lambda;
  const double sq = w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
  const double p01 = 2.0 * w[0] * w[1];
  const double p02 = 2.0 * w[0] * w[2];
  const double p12 = 2.0 * w[1] * w[2];
  const double d01 = l[0] - l[1], d02 = l[0] - l[2], d12 = l[1] - l[2];
  if (grid.affine) {
    Rotation r01, r02, r12;
    r01.init(d01, grid.t0, grid.dt);
    r02.init(d02, grid.t0, grid.dt);
    r12.init(d12, grid.t0, grid.dt);
    for (std::size_t j = 0; j < t.size(); ++j) {
      acc.add(j, wgt * (sq + p01 * r01.c + p02 * r02.c + p12 * r12.c));
      r01.step();
      r02.step();
      r12.step();
    }
  } else {
    for (std::size_t j = 0; j < t.size(); ++j) {
      acc.add(j, wgt * (sq + p01 * std::cos(d01 * t[j]) +
                        p02 * std::cos(d02 * t[j]) +
                        p12 * std::cos(d12 * t[j])));
    }
  }
}

// General block of any dimension: P = |sum_i w_i e^{-i l_i t}|^2 with real
// weights w_i = <e1|v_i>^2.
inline void add_amplitude_curve(const std::vector<double>& lambda,
                                const std::vector<double>& weight, double wgt,
                                const TimeGrid& grid, CompensatedVector& acc) {
  const auto& t = *grid.times;
  const std::size_t n = lambda.size();
  if (grid.affine) {
    std::vector<Rotation> rot(n);
    for (std::size_t i = 0; i < n; ++i)
      rot[i].init(lambda[i], grid.t0, grid.dt);
    for (std::size_t j = 0; j < t.size(); ++j) {
      double re = 0.0, im = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        re += weight[i] * rot[i].c;
        im += weight[i] * rot[i].s;
        rot[i].step();
      }
      acc.add(j, wgt * (re * re + im * im));
    }
  } else {
    for (std::size_t j = 0; j < t.size(); ++j) {
      double re = 0.0, im = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        re += weight[i] * std::cos(lambda[i] * t[j]);
        im += weight[i] * std::sin(lambda[i] * t[j]);
      }
      acc.add(j, wgt * (re * re + im * im));
    }
  }
}

}  // namespace zeno::detail
