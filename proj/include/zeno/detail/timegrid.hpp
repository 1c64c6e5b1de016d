#pragma once

// Time-grid classification and the cosine rotation recurrence used by the
// thermal hot loops.
//
// On an affine grid t_j = t0 + j*dt, cos/sin(w t_j) follow from one complex
// rotation per step (6 flops) instead of a libm call; with ~10^6 blocks and
// hundreds of grid points that is the difference between seconds and minutes.
// The recurrence is evaluated per block in grid order, so it is bitwise
// reproducible for any worker partition.  Phase drift after n steps is
// O(n * eps), far below every tolerance in this project for n <= 10^5.

#include <cmath>
#include <cstddef>
#include <vector>

namespace zeno::detail {

struct TimeGrid {
  const std::vector<double>* times = nullptr;
  bool affine = false;
  double t0 = 0.0;
  double dt = 0.0;

  std::size_t size() const { return times->size(); }
};

inline TimeGrid classify_times(const std::vector<double>& t) {
  TimeGrid g;
  g.times = &t;
  if (t.empty()) return g;
  g.t0 = t.front();
  g.dt = t.size() > 1 ? t[1] - t[0] : 0.0;
  const double scale =
      std::max(std::abs(t.front()), std::abs(t.back())) + 1.0;
  const double tol = 64.0 * 2.220446049250313e-16 * scale;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (std::abs(t[j] - (g.t0 + double(j) * g.dt)) > tol) return g;
  }
  g.affine = true;
  return g;
}

// Iterates (cos, sin)(w * (t0 + j*dt)) over j.
struct Rotation {
  double c = 1.0, s = 0.0;
  double dc = 1.0, ds = 0.0;

  void init(double w, double t0, double dt) {
    c = std::cos(w * t0);
    s = std::sin(w * t0);
    dc = std::cos(w * dt);
    ds = std::sin(w * dt);
  }
  void step() {
    const double nc = c * dc - s * ds;
    s = s * dc + c * ds;
    c = nc;
  }
};

}  // namespace zeno::detail
