#pragma once

// Near-zero eigenpair machinery for the complex 3x3 arrowhead matrix
//
//        [ 0    a1   0  ]
//   M =  [ a1*  0    a2 ],   delta real,
//        [ 0    a2*  d  ]
//
// the detuned block in its most general (complex-coupling) form.  When the
// 2-3 coupling dominates (|a1| << |a2|) and |d| < |a2|, M keeps an
// eigenvalue close to zero whose eigenvector stays close to |A> = e1; the
// overlap |<A|eta>| then floors the survival probability at
// (2|<A|eta>|^2 - 1)^2 for all times.
//
// The characteristic polynomial only involves |a1|^2 and |a2|^2, so the
// cubic kernel of the tridiagonal blocks applies unchanged.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "zeno/detail/cubic.hpp"
#include "zeno/errors.hpp"

namespace zeno {

template <class S = double>
struct ArrowheadMatrix3 {
  std::complex<S> alpha1{};
  std::complex<S> alpha2{};
  S delta{};

  Eigen::Matrix<std::complex<S>, 3, 3> matrix() const {
    Eigen::Matrix<std::complex<S>, 3, 3> m;
    const std::complex<S> zero{};
    m << zero, alpha1, zero,
         std::conj(alpha1), zero, alpha2,
         zero, std::conj(alpha2), std::complex<S>{delta, S(0)};
    return m;
  }
};

template <class S = double>
struct NearZeroEigenpair {
  S lambda_near{};
  S overlap_A{};  // |<A|eta>| in [0,1]
  Eigen::Matrix<std::complex<S>, 3, 1> vector;  // unit norm
};

namespace detail {

// Bilinear cross product: orthogonal (without conjugation) to both
// arguments, which is what a null vector of a row system needs.
template <class S>
Eigen::Matrix<std::complex<S>, 3, 1> bilinear_cross(
    const Eigen::Matrix<std::complex<S>, 1, 3>& x,
    const Eigen::Matrix<std::complex<S>, 1, 3>& y) {
  Eigen::Matrix<std::complex<S>, 3, 1> out;
  out << x[1] * y[2] - x[2] * y[1],
         x[2] * y[0] - x[0] * y[2],
         x[0] * y[1] - x[1] * y[0];
  return out;
}

}  // namespace detail

// The real root of det(M - lambda) closest to zero (ties broken toward the
// negative root), its eigenvector, and the overlap with |A>.
template <class S>
NearZeroEigenpair<S> near_zero_eigenpair(const ArrowheadMatrix3<S>& m,
                                         S eig_residual = S(1e-10)) {
  using C = std::complex<S>;
  const S a1sq = std::norm(m.alpha1);
  const S a2sq = std::norm(m.alpha2);
  NearZeroEigenpair<S> out;

  if (a1sq == S(0)) {
    // |A> itself is an exact eigenvector with eigenvalue 0.
    out.lambda_near = S(0);
    out.overlap_A = S(1);
    out.vector << C{S(1), S(0)}, C{}, C{};
    return out;
  }

  if (m.delta == S(0)) {
    // lambda = 0 exactly; eigenvector (a2, 0, -a1*)/alpha.
    const S alpha = std::sqrt(a1sq + a2sq);
    out.lambda_near = S(0);
    out.overlap_A = std::abs(m.alpha2) / alpha;
    out.vector << m.alpha2 / alpha, C{}, -std::conj(m.alpha1) / alpha;
    return out;
  }

  const auto roots = detail::tridiag_cubic_roots(a1sq, a2sq, m.delta);
  S eta = roots[0];
  for (int i = 1; i < 3; ++i) {
    const S cand = roots[i];
    if (std::abs(cand) < std::abs(eta) ||
        (std::abs(cand) == std::abs(eta) && cand < eta))
      eta = cand;
  }
  out.lambda_near = eta;

  const Eigen::Matrix<C, 3, 3> mat = m.matrix();
  const S scale = std::max(mat.norm(), S(1));

  // Unnormalized eigenvector (1, eta/a1, -eta a2*/((d-eta) a1)); falls back
  // to row cross products when the denominator degenerates (a2 = 0 with eta
  // landing on the spectator eigenvalue d).
  Eigen::Matrix<C, 3, 1> v;
  const S denom = std::abs(m.delta - eta) * std::abs(m.alpha1);
  if (denom > S(1e-14) * scale * scale) {
    v << C{S(1), S(0)}, eta / m.alpha1,
        -eta * std::conj(m.alpha2) / ((m.delta - eta) * m.alpha1);
  } else {
    Eigen::Matrix<C, 3, 3> shifted = mat;
    shifted.diagonal().array() -= C{eta, S(0)};
    const auto c01 =
        detail::bilinear_cross<S>(shifted.row(0), shifted.row(1));
    const auto c02 =
        detail::bilinear_cross<S>(shifted.row(0), shifted.row(2));
    const auto c12 =
        detail::bilinear_cross<S>(shifted.row(1), shifted.row(2));
    v = c01;
    if (c02.squaredNorm() > v.squaredNorm()) v = c02;
    if (c12.squaredNorm() > v.squaredNorm()) v = c12;
  }

  const S n = v.norm();
  if (n == S(0))
    throw ConvergenceFailure("arrowhead eigenvector construction collapsed");
  v /= n;
  out.vector = v;
  out.overlap_A = std::abs(v[0]);

  const S res = (mat * v - C{eta, S(0)} * v).norm();
  if (res > eig_residual * scale)
    throw ConvergenceFailure("arrowhead eigenpair residual " +
                             std::to_string(double(res)) +
                             " exceeds tolerance");
  return out;
}

// |alpha1|^2 |delta| / |alpha2|^2: the near-zero eigenvalue satisfies
// |lambda_near| < this bound (strictly when alpha1 and delta are nonzero,
// by the sign change of the secular polynomial between 0 and the bound).
template <class S>
S eigenvalue_modulus_bound(const ArrowheadMatrix3<S>& m) {
  const S a2sq = std::norm(m.alpha2);
  if (a2sq == S(0))
    throw DomainError("alpha2 must be nonzero for the modulus bound");
  return std::norm(m.alpha1) * std::abs(m.delta) / a2sq;
}

// Survival floor (2|<A|eta>|^2 - 1)^2, clamped to 0 where the bound is
// vacuous (overlap^2 < 1/2).  Valid lower bound on |<A|psi(t)>|^2 for all t.
template <class S>
S survival_floor(const ArrowheadMatrix3<S>& m) {
  const auto pair = near_zero_eigenpair(m);
  const S s = S(2) * pair.overlap_A * pair.overlap_A - S(1);
  const S clamped = std::max(S(0), s);
  return clamped * clamped;
}

// Overlap behaviour along a family r = |a1/a2| -> 0 at fixed delta: the
// deficit 1 - |<A|eta>| must shrink monotonically, empirically like r^2.
struct OverlapLimitPoint {
  double ratio = 0.0;
  double overlap = 0.0;
};

struct OverlapLimitReport {
  std::vector<OverlapLimitPoint> points;  // descending ratio
  bool monotone = false;   // deficit strictly decreasing along the family
  double min_order = 0.0;  // empirical exponents between adjacent points
  double max_order = 0.0;
};

inline OverlapLimitReport overlap_limit_check(std::complex<double> alpha2,
                                              double delta,
                                              std::vector<double> ratios) {
  if (ratios.empty()) throw DomainError("empty ratio family");
  std::sort(ratios.begin(), ratios.end(), std::greater<>());
  OverlapLimitReport rep;
  for (double r : ratios) {
    if (!(r >= 0.0)) throw DomainError("ratios must be >= 0");
    ArrowheadMatrix3<double> m;
    m.alpha1 = r * std::abs(alpha2);
    m.alpha2 = alpha2;
    m.delta = delta;
    rep.points.push_back({r, near_zero_eigenpair(m).overlap_A});
  }
  rep.monotone = true;
  bool have_order = false;
  for (std::size_t k = 0; k + 1 < rep.points.size(); ++k) {
    const double d0 = 1.0 - rep.points[k].overlap;
    const double d1 = 1.0 - rep.points[k + 1].overlap;
    if (!(d1 < d0 || (d1 == 0.0 && d0 == 0.0))) rep.monotone = false;
    if (d0 > 0.0 && d1 > 0.0 &&
        rep.points[k].ratio > rep.points[k + 1].ratio &&
        rep.points[k + 1].ratio > 0.0) {
      const double order = std::log(d0 / d1) /
                           std::log(rep.points[k].ratio /
                                    rep.points[k + 1].ratio);
      if (!have_order) {
        rep.min_order = rep.max_order = order;
        have_order = true;
      } else {
        rep.min_order = std::min(rep.min_order, order);
        rep.max_order = std::max(rep.max_order, order);
      }
    }
  }
  return rep;
}

}  // namespace zeno
