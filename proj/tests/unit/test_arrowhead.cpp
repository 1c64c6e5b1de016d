#include "doctest.h"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "zeno/arrowhead.hpp"

using namespace zeno;
using C = std::complex<double>;

TEST_CASE("matrix() lays out the arrowhead with conjugate symmetry") {
  ArrowheadMatrix3<double> m;
  m.alpha1 = C{0.2, 0.7};
  m.alpha2 = C{-1.1, 0.4};
  m.delta = 0.9;
  const Eigen::Matrix3cd a = m.matrix();
  CHECK(a(0, 0) == C{0.0, 0.0});
  CHECK(a(0, 1) == m.alpha1);
  CHECK(a(0, 2) == C{0.0, 0.0});
  CHECK(a(1, 0) == std::conj(m.alpha1));
  CHECK(a(1, 2) == m.alpha2);
  CHECK(a(2, 1) == std::conj(m.alpha2));
  CHECK(a(2, 2) == C{0.9, 0.0});
  CHECK((a - a.adjoint()).norm() == 0.0);
}

TEST_CASE("frozen eigenpair, floor and modulus bound") {
  ArrowheadMatrix3<double> m;
  m.alpha1 = C{0.1, 0.05};
  m.alpha2 = C{1.0, -0.3};
  m.delta = 0.4;

  const auto pair = near_zero_eigenpair(m);
  CHECK(pair.lambda_near ==
        doctest::Approx(0.0045277936126191320605).epsilon(1e-13));
  CHECK(pair.overlap_A ==
        doctest::Approx(0.99352818435434024551).epsilon(1e-13));
  CHECK(pair.vector.norm() == doctest::Approx(1.0).epsilon(1e-14));

  CHECK(survival_floor(m) ==
        doctest::Approx(0.94905883271735036634).epsilon(1e-13));

  // |a1|^2 |d| / |a2|^2 = 0.0125 * 0.4 / 1.09
  const double bound = eigenvalue_modulus_bound(m);
  CHECK(bound ==
        doctest::Approx(0.0045871559633027522936).epsilon(1e-15));
  CHECK(std::abs(pair.lambda_near) < bound);
}

TEST_CASE("modulus bound requires a nonzero 2-3 coupling") {
  ArrowheadMatrix3<double> m;
  m.alpha1 = C{0.1, 0.0};
  m.alpha2 = C{0.0, 0.0};
  m.delta = 0.4;
  CHECK_THROWS_AS(eigenvalue_modulus_bound(m), DomainError);
}

TEST_CASE("zero detuning gives the exact zero mode") {
  ArrowheadMatrix3<double> m;
  m.alpha1 = C{0.3, 0.0};
  m.alpha2 = C{1.0, 0.0};
  m.delta = 0.0;
  const auto pair = near_zero_eigenpair(m);
  CHECK(pair.lambda_near == 0.0);
  CHECK(pair.overlap_A ==
        doctest::Approx(0.9578262852211514).epsilon(1e-15));  // 1/sqrt(1.09)
  // eigenvector (a2, 0, -a1*)/alpha
  const double alpha = std::sqrt(1.09);
  CHECK(std::abs(pair.vector[0] - C{1.0 / alpha, 0.0}) < 1e-15);
  CHECK(std::abs(pair.vector[1]) == 0.0);
  CHECK(std::abs(pair.vector[2] + C{0.3 / alpha, 0.0}) < 1e-15);
  CHECK((m.matrix() * pair.vector).norm() < 1e-15);

  m.alpha1 = C{1.0, 0.0};  // equal couplings: overlap 1/sqrt(2)
  CHECK(near_zero_eigenpair(m).overlap_A ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("decoupled level 1 is its own eigenvector") {
  ArrowheadMatrix3<double> m;
  m.alpha1 = C{0.0, 0.0};
  m.alpha2 = C{0.8, -0.1};
  m.delta = -0.7;
  const auto pair = near_zero_eigenpair(m);
  CHECK(pair.lambda_near == 0.0);
  CHECK(pair.overlap_A == 1.0);
  CHECK(pair.vector[0] == C{1.0, 0.0});
  CHECK(pair.vector[1] == C{0.0, 0.0});
  CHECK(pair.vector[2] == C{0.0, 0.0});
  CHECK(survival_floor(m) == 1.0);
}

TEST_CASE("degenerate denominator falls back to the row cross product") {
  // alpha2 = 0 with |delta| < |alpha1|: the near-zero root is the spectator
  // eigenvalue delta itself, whose eigenvector is e3.
  ArrowheadMatrix3<double> m;
  m.alpha1 = C{1.0, 0.0};
  m.alpha2 = C{0.0, 0.0};
  m.delta = 0.3;
  const auto pair = near_zero_eigenpair(m);
  CHECK(pair.lambda_near == doctest::Approx(0.3).epsilon(1e-13));
  CHECK(pair.overlap_A == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
  CHECK(std::abs(pair.vector[2]) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(survival_floor(m) == 0.0);  // clamped: overlap^2 < 1/2
}

TEST_CASE("random arrowheads: residual, bound, floor, dense-solver parity") {
  std::mt19937_64 rng(13717421);
  std::uniform_real_distribution<double> logr(std::log(1e-3), std::log(0.2));
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::uniform_real_distribution<double> drel(1e-3, 0.9);
  std::uniform_real_distribution<double> ph(0.0, 6.283185307179586);
  std::uniform_int_distribution<int> sgn(0, 1);

  for (int k = 0; k < 120; ++k) {
    ArrowheadMatrix3<double> m;
    const double a2 = mag(rng);
    const double a1 = std::exp(logr(rng)) * a2;
    m.alpha1 = std::polar(a1, ph(rng));
    m.alpha2 = std::polar(a2, ph(rng));
    m.delta = (sgn(rng) ? 1.0 : -1.0) * drel(rng) * a2;

    const auto pair = near_zero_eigenpair(m);
    const Eigen::Matrix3cd mat = m.matrix();
    const double scale = std::max(mat.norm(), 1.0);

    CHECK(pair.vector.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((mat * pair.vector - pair.lambda_near * pair.vector).norm() <
          1e-10 * scale);
    CHECK(std::abs(pair.lambda_near) < eigenvalue_modulus_bound(m));

    // parity with the dense Hermitian solver's smallest-|lambda| pair
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(mat);
    int best = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(es.eigenvalues()[i]) <
          std::abs(es.eigenvalues()[best]))
        best = i;
    CHECK(std::abs(pair.lambda_near - es.eigenvalues()[best]) <
          5e-13 * scale);
    CHECK(std::abs(pair.overlap_A -
                   std::abs(es.eigenvectors().col(best)[0])) < 1e-10);

    // the floor really floors the exact propagator survival
    const double floor = survival_floor(m);
    double lowest = 1.0;
    const double t_max = 30.0 / a2;
    for (int j = 0; j < 160; ++j) {
      const double t = t_max * double(j) / 159.0;
      lowest = std::min(lowest, survival_expm(Eigen::MatrixXcd(mat), t));
    }
    CHECK(floor <= lowest + 1e-12);
  }
}

TEST_CASE("overlap deficit shrinks quadratically along a coupling family") {
  const auto rep =
      overlap_limit_check(C{1.0, -0.3}, 0.4, {0.01, 0.1, 0.03});
  REQUIRE(rep.points.size() == 3);
  CHECK(rep.points[0].ratio == 0.1);  // sorted descending internally
  CHECK(rep.points[2].ratio == 0.01);
  CHECK(rep.monotone);
  CHECK(rep.min_order > 1.5);
  CHECK(rep.max_order < 2.5);
  for (const auto& p : rep.points) {
    CHECK(p.overlap > 0.9);
    CHECK(p.overlap < 1.0);
  }

  CHECK_THROWS_AS(overlap_limit_check(C{1.0, 0.0}, 0.4, {}), DomainError);
  CHECK_THROWS_AS(overlap_limit_check(C{1.0, 0.0}, 0.4, {0.1, -0.2}),
                  DomainError);
}
