#include "zeno/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace zeno {

double zeno_threshold(const ValidatedParams& params, double epsilon,
                      long n_a) {
  if (n_a < 0) throw DomainError("n_a must be nonnegative");
  const auto tc = threshold_coeffs(params.g12(), params.g23(), epsilon);
  return tc.alpha * double(n_a) + tc.beta;
}

namespace {

void require_positive_temperature(const ValidatedParams& params) {
  if (!(params.temperature() > 0.0))
    throw DomainError("thermal bound needs temperature > 0, got " +
                      std::to_string(params.temperature()));
}

}  // namespace

double finite_T_lower_bound(const ValidatedParams& params, double epsilon) {
  require_positive_temperature(params);
  return detail::finite_t_bound_kernel(params.omega_a(), params.omega_b(),
                                       params.g12(), params.g23(),
                                       params.temperature(), epsilon);
}

double finite_T_lower_bound_ceiling(const ValidatedParams& params,
                                    double epsilon) {
  require_positive_temperature(params);
  const auto tc = threshold_coeffs(params.g12(), params.g23(), epsilon);
  const double T = params.temperature();
  const double wa = params.omega_a(), wb = params.omega_b();
  const double norm_a = -std::expm1(-wa / T);

  // sum_{n_a} e^{-w_a n_a/T} * e^{-w_b ceil(max(0, n~_b))/T}; terms decay at
  // least geometrically with ratio e^{-w_a/T}, so stop once they stop
  // mattering at double precision.
  double sum = 0.0;
  for (long na = 0; na <= 50'000'000; ++na) {
    const double line = tc.alpha * double(na) + tc.beta;
    const double mb = std::max(0.0, std::ceil(line));
    const double term = std::exp(-(wa * double(na) + wb * mb) / T);
    sum += term;
    if (term <= 1e-18 * sum) break;
  }
  return std::sqrt(1.0 - epsilon) * norm_a * sum;
}

double high_T_lower_bound(const ValidatedParams& params, double epsilon) {
  return detail::high_t_bound_kernel(params.omega_a(), params.omega_b(),
                                     params.g12(), params.g23(), epsilon);
}

double eta_ratio(const ValidatedParams& params) {
  return detail::eta_kernel(params.omega_a(), params.omega_b(), params.g12(),
                            params.g23());
}

BoundReport bound_report(const ValidatedParams& params, double epsilon) {
  require_positive_temperature(params);
  BoundReport r;
  r.epsilon = epsilon;
  r.chi = chi(epsilon);
  const auto tc = threshold_coeffs(params.g12(), params.g23(), epsilon);
  r.alpha_eps = tc.alpha;
  r.beta_eps = tc.beta;
  r.eta = eta_ratio(params);
  r.finite_T_bound = finite_T_lower_bound(params, epsilon);
  r.high_T_bound = high_T_lower_bound(params, epsilon);
  const double T = params.temperature();
  r.validity = {(tc.beta + 1.0) * params.omega_b() / T,
                (params.omega_a() + tc.alpha * params.omega_b()) / T};
  return r;
}

BoundReport best_bound(const ValidatedParams& params, double /*t_irrelevant*/,
                       int grid_points) {
  require_positive_temperature(params);
  if (grid_points < 2) throw DomainError("need at least 2 grid points");

  const double lo = std::log(1e-6);
  const double hi = std::log(1.0 - 1e-6);
  auto eps_at = [&](double u) { return std::exp(u); };
  auto value_at = [&](double u) {
    return finite_T_lower_bound(params, eps_at(u));
  };

  // coarse scan
  int ibest = 0;
  double vbest = -1.0;
  std::vector<double> us(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i) {
    const double u =
        lo + (hi - lo) * double(i) / double(grid_points - 1);
    us[std::size_t(i)] = u;
    const double v = value_at(u);
    if (v > vbest) {
      vbest = v;
      ibest = i;
    }
  }

  // golden section inside the bracketing interval; fixed iteration count
  // keeps the result deterministic and independent of the grid resolution.
  double a = us[std::size_t(std::max(ibest - 1, 0))];
  double b = us[std::size_t(std::min(ibest + 1, grid_points - 1))];
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = value_at(c), fd = value_at(d);
  for (int it = 0; it < 80; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = value_at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = value_at(d);
    }
  }
  const double upolish = 0.5 * (a + b);
  double ustar = us[std::size_t(ibest)];
  if (value_at(upolish) > vbest) ustar = upolish;

  return bound_report(params, eps_at(ustar));
}

}  // namespace zeno
