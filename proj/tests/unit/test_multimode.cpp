#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <vector>

#include "zeno/multimode.hpp"

using namespace zeno;

namespace {

MultimodeSpec single_pair(double nu, double g12, double mu, double g23,
                          double T) {
  MultimodeSpec s;
  s.modes_12 = {{nu, g12}};
  s.modes_23 = {{mu, g23}};
  s.temperature = T;
  return s;
}

double curve_min(const SurvivalCurve& c) {
  return *std::min_element(c.p1.begin(), c.p1.end());
}

}  // namespace

TEST_CASE("multimode validation rejects malformed specs") {
  MultimodeSpec s = single_pair(10.0, 1.0, 1.0, 1.0, 5.0);
  CHECK_NOTHROW(validate(s));

  MultimodeSpec no12 = s;
  no12.modes_12.clear();
  CHECK_THROWS_AS(validate(no12), DomainError);
  MultimodeSpec no23 = s;
  no23.modes_23.clear();
  CHECK_THROWS_AS(validate(no23), DomainError);

  MultimodeSpec badf = s;
  badf.modes_12[0].frequency = 0.0;
  CHECK_THROWS_AS(validate(badf), NonPositiveFrequency);
  badf = s;
  badf.modes_23[0].frequency = -2.0;
  CHECK_THROWS_AS(validate(badf), NonPositiveFrequency);

  MultimodeSpec coldf = s;
  coldf.temperature = -1.0;
  CHECK_THROWS_AS(validate(coldf), DomainError);

  MultimodeSpec badb = s;
  badb.bohr_12 = -3.0;
  CHECK_THROWS_AS(validate(badb), NonPositiveFrequency);
}

TEST_CASE("atomic splittings default to the first mode of each family") {
  MultimodeSpec s;
  s.modes_12 = {{10.0, 1.0}, {11.0, 0.5}};
  s.modes_23 = {{1.5, 0.5}, {2.5, 0.1}};
  s.temperature = 1.0;
  const auto v = validate(s);
  CHECK(v.p() == 2);
  CHECK(v.q() == 2);
  CHECK(v.bohr_12() == 10.0);
  CHECK(v.bohr_23() == 1.5);

  s.bohr_12 = 9.5;
  s.bohr_23 = 2.0;
  const auto w = validate(s);
  CHECK(w.bohr_12() == 9.5);
  CHECK(w.bohr_23() == 2.0);
}

TEST_CASE("block assembly places couplings and detunings by index") {
  MultimodeSpec s;
  s.modes_12 = {{10.0, 1.0}, {11.0, 0.5}};
  s.modes_23 = {{1.0, 2.0}, {1.25, 0.25}};
  s.temperature = 0.0;
  const auto v = validate(s);  // bohr_12 = 10, bohr_23 = 1

  MultiBlockIndex idx;
  idx.n_vec = {1, 3};
  idx.m_vec = {2, 0};
  const MultiBlockMatrix blk = build_multiblock(v, idx);
  REQUIRE(blk.dim() == 7);
  REQUIRE(blk.mat.rows() == 7);
  CHECK((blk.mat - blk.mat.transpose()).norm() == 0.0);

  // level-1 row couples only to the p level-2 kets
  CHECK(blk.mat(0, 0) == 0.0);
  CHECK(blk.mat(0, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(blk.mat(0, 2) == doctest::Approx(1.0).epsilon(1e-15));  // 0.5*sqrt(4)
  for (int j = 3; j < 7; ++j) CHECK(blk.mat(0, j) == 0.0);
  CHECK(blk.mat(1, 2) == 0.0);

  // level-2 detunings nu_k - bohr_12
  CHECK(blk.mat(1, 1) == 0.0);
  CHECK(blk.mat(2, 2) == 1.0);

  // k-major level-3 layout: j = 1 + p + k*q + l
  CHECK(blk.mat(1, 3) == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-15));
  CHECK(blk.mat(1, 4) == 0.25);
  CHECK(blk.mat(2, 5) == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-15));
  CHECK(blk.mat(2, 6) == 0.25);
  CHECK(blk.mat(1, 5) == 0.0);  // no cross-k coupling
  CHECK(blk.mat(1, 6) == 0.0);
  CHECK(blk.mat(3, 4) == 0.0);

  // level-3 diagonal: (nu_k - bohr_12) + (mu_l - bohr_23)
  CHECK(blk.mat(3, 3) == 0.0);
  CHECK(blk.mat(4, 4) == 0.25);
  CHECK(blk.mat(5, 5) == 1.0);
  CHECK(blk.mat(6, 6) == 1.25);

  MultiBlockIndex bad = idx;
  bad.n_vec = {1};
  CHECK_THROWS_AS(build_multiblock(v, bad), DomainError);
  bad = idx;
  bad.m_vec[1] = -1;
  CHECK_THROWS_AS(build_multiblock(v, bad), DomainError);
  CHECK_THROWS_AS(build_multiblock(v, idx, 6), DimensionOverflow);
  CHECK_NOTHROW(build_multiblock(v, idx, 7));
}

TEST_CASE("single resonant pair reproduces the two-oscillator module bitwise") {
  Tolerances tol;
  tol.tail_mass = 1e-3;
  const auto times = uniform_times(20.0, 60);

  const auto multi = thermal_survival(
      validate(single_pair(10.0, 1.0, 1.0, 1.0, 5.0)), times, tol, 1);
  const auto two = survival_curve(
      validate(make_resonant(10.0, 1.0, 1.0, 1.0, 5.0), Mode::resonant),
      times, tol, 1);

  REQUIRE(multi.p1.size() == two.p1.size());
  CHECK(std::memcmp(multi.p1.data(), two.p1.data(),
                    multi.p1.size() * sizeof(double)) == 0);
}

TEST_CASE("single detuned pair reproduces the two-oscillator module bitwise") {
  Tolerances tol;
  tol.tail_mass = 1e-3;
  const auto times = uniform_times(20.0, 60);

  MultimodeSpec s = single_pair(10.0, 1.0, 1.5, 1.0, 5.0);
  s.bohr_23 = 1.0;  // mode sits 0.5 above the 2-3 splitting
  const auto multi = thermal_survival(validate(s), times, tol, 1);
  const auto two = survival_curve(
      validate(make_detuned(10.0, 1.5, 1.0, 1.0, 0.5, 5.0), Mode::detuned),
      times, tol, 1);

  REQUIRE(multi.p1.size() == two.p1.size());
  CHECK(std::memcmp(multi.p1.data(), two.p1.data(),
                    multi.p1.size() * sizeof(double)) == 0);
}

TEST_CASE("two protecting modes act through their bright combination") {
  // resonant 1x2 block, alpha = 1, betas = (3,4): survival depends only on
  // b^2 = 25, so it matches the single-mode block with coupling 5
  MultimodeSpec s;
  s.modes_12 = {{1.0, 1.0}};
  s.modes_23 = {{1.0, 3.0}, {1.0, 4.0}};
  s.temperature = 0.0;
  const auto v = validate(s);
  MultiBlockIndex idx;
  idx.n_vec = {0};
  idx.m_vec = {0, 0};
  const auto blk = build_multiblock(v, idx);

  // ((b^2 + a^2 cos(G t))/G^2)^2 at G = sqrt(26), t = 0.37
  CHECK(survival_probability_multiblock(blk, 0.37) ==
        doctest::Approx(0.90172439087694309861).epsilon(1e-13));

  const auto vone = validate(single_pair(1.0, 1.0, 1.0, 5.0, 0.0));
  MultiBlockIndex ione;
  ione.n_vec = {0};
  ione.m_vec = {0};
  const auto one = build_multiblock(vone, ione);
  for (double t : {0.0, 0.37, 1.1, 2.9, 7.3})
    CHECK(std::abs(survival_probability_multiblock(blk, t) -
                   survival_probability_multiblock(one, t)) < 1e-10);
}

TEST_CASE("populations form a probability vector over the block") {
  MultimodeSpec s;
  s.modes_12 = {{10.0, 1.0}, {11.0, 0.5}};
  s.modes_23 = {{1.0, 2.0}, {1.25, 0.25}};
  s.temperature = 0.0;
  const auto v = validate(s);
  MultiBlockIndex idx;
  idx.n_vec = {1, 3};
  idx.m_vec = {2, 0};
  const auto blk = build_multiblock(v, idx);
  for (double t : {0.0, 0.4, 1.7}) {
    const Eigen::VectorXd pops = multiblock_populations(blk, t);
    REQUIRE(pops.size() == 7);
    CHECK(pops.sum() == doctest::Approx(1.0).epsilon(1e-12));
    for (Eigen::Index i = 0; i < pops.size(); ++i) {
      CHECK(pops[i] >= -1e-14);
      CHECK(pops[i] <= 1.0 + 1e-12);
    }
    CHECK(pops[0] == doctest::Approx(survival_probability_multiblock(blk, t))
                         .epsilon(1e-12)
                         .scale(1.0));
  }
}

TEST_CASE("frozen thermal curves for one mode against two") {
  Tolerances tol;
  tol.tail_mass = 1e-3;
  const auto times = uniform_times(20.0, 60);

  MultimodeSpec low;
  low.modes_12 = {{10.0, std::sqrt(2.0)}};
  low.modes_23 = {{1.0, 1.0}, {1.0, 1.0}};
  low.temperature = 5.0;
  const auto clow = thermal_survival(validate(low), times, tol, 1);
  CHECK(curve_min(clow) ==
        doctest::Approx(0.4426279807660501).epsilon(1e-9));

  bool saw_blocks = false;
  for (const auto& [k, val] : clow.metadata.items())
    if (k == "blocks") {
      CHECK(val == "8405");  // 5 * 41 * 41
      saw_blocks = true;
    }
  CHECK(saw_blocks);

  MultimodeSpec eq = low;
  eq.modes_23 = {{10.0, 1.0}, {10.0, 1.0}};
  const auto ceq = thermal_survival(validate(eq), times, tol, 1);
  CHECK(curve_min(ceq) ==
        doctest::Approx(0.025139323711254984).epsilon(1e-9));

  // hot modes matching the 2-3 splitting protect far better than cold ones
  CHECK(curve_min(clow) > curve_min(ceq) + 0.3);
}

TEST_CASE("thermal averages are bitwise identical across worker counts") {
  Tolerances tol;
  tol.tail_mass = 1e-3;
  const auto times = uniform_times(20.0, 60);
  MultimodeSpec s;
  s.modes_12 = {{10.0, std::sqrt(2.0)}};
  s.modes_23 = {{1.0, 1.0}, {1.0, 1.0}};
  s.temperature = 5.0;
  const auto v = validate(s);
  const auto c1 = thermal_survival(v, times, tol, 1);
  const auto c8 = thermal_survival(v, times, tol, 8);
  REQUIRE(c1.p1.size() == c8.p1.size());
  CHECK(std::memcmp(c1.p1.data(), c8.p1.data(),
                    c1.p1.size() * sizeof(double)) == 0);
}

TEST_CASE("the 1xq entry point refuses extra 1-2 modes") {
  MultimodeSpec s;
  s.modes_12 = {{10.0, 1.0}, {11.0, 1.0}};
  s.modes_23 = {{1.0, 1.0}};
  s.temperature = 1.0;
  const auto times = uniform_times(5.0, 4);
  Tolerances tol;
  CHECK_THROWS_AS(thermal_survival_1xq(validate(s), times, tol),
                  DomainError);
}

TEST_CASE("block counting saturates instead of overflowing") {
  MultimodeSpec s;
  s.modes_12 = {{10.0, std::sqrt(2.0)}};
  s.modes_23 = {{1.0, 1.0}, {1.0, 1.0}};
  s.temperature = 5.0;
  const auto v = validate(s);

  Tolerances tol;
  tol.tail_mass = 1e-3;
  CHECK(multiblock_count(v, tol) == 8405);

  Tolerances tiny = tol;
  tiny.max_blocks = 100;
  CHECK(multiblock_count(v, tiny) == 101);  // max_blocks + 1, saturated
  CHECK_THROWS_AS(
      thermal_survival(v, uniform_times(5.0, 4), tiny), CutoffOverflow);
}

TEST_CASE("multimode grids are validated like the two-oscillator ones") {
  const auto v = validate(single_pair(10.0, 1.0, 1.0, 1.0, 1.0));
  Tolerances tol;
  CHECK_THROWS_AS(thermal_survival(v, {}, tol), DomainError);
  CHECK_THROWS_AS(thermal_survival(v, {-1.0, 0.0}, tol), DomainError);
  CHECK_THROWS_AS(thermal_survival(v, {0.0, 2.0, 2.0}, tol), DomainError);
}
