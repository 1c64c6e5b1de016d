#pragma once

// Closed-form real roots of the characteristic cubic shared by the 3x3
// tridiagonal block ([[0,a,0],[a,0,b],[0,b,d]]) and the complex arrowhead
// ([[0,a1,0],[a1*,0,a2],[0,a2*,d]]):
//
//   p(x) = x^3 - d x^2 - (a2 + b2) x + a2 d,
//
// with a2 = a^2 (resp. |a1|^2) and b2 = b^2 (resp. |a2|^2).  Hermiticity
// guarantees three real roots, so the trigonometric method applies; one or
// two Newton steps polish each root to full double accuracy.

#include <algorithm>
#include <array>
#include <cmath>

namespace zeno::detail {

template <class S>
S eval_cubic(S a2, S b2, S d, S x) {
  return ((x - d) * x - (a2 + b2)) * x + a2 * d;
}

template <class S>
S eval_cubic_deriv(S a2, S b2, S d, S x) {
  return (S(3) * x - S(2) * d) * x - (a2 + b2);
}

// Ascending roots of p above.  Pass the squared couplings, not the couplings.
template <class S>
std::array<S, 3> tridiag_cubic_roots(S a2, S b2, S d) {
  const S s2 = a2 + b2;
  if (s2 == S(0)) {
    // diagonal matrix diag(0, 0, d)
    std::array<S, 3> r{S(0), S(0), d};
    std::sort(r.begin(), r.end());
    return r;
  }

  // depress with x = y + d/3:  y^3 + p y + q = 0, p < 0 here
  const S p = -d * d / S(3) - s2;
  const S q = (S(-2) * d * d / S(27) - s2 / S(3) + a2) * d;

  const S m = S(2) * std::sqrt(-p / S(3));
  S arg = S(3) * q / (p * m);
  arg = std::clamp(arg, S(-1), S(1));
  const S phi = std::acos(arg) / S(3);

  constexpr S kTwoPiThirds = S(2.0943951023931954923084289221863352561);
  std::array<S, 3> roots{
      m * std::cos(phi - S(2) * kTwoPiThirds) + d / S(3),  // smallest
      m * std::cos(phi - kTwoPiThirds) + d / S(3),
      m * std::cos(phi) + d / S(3),  // largest
  };

  for (S& x : roots) {
    for (int it = 0; it < 2; ++it) {
      const S fp = eval_cubic_deriv(a2, b2, d, x);
      if (fp == S(0)) break;
      x -= eval_cubic(a2, b2, d, x) / fp;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace zeno::detail
