#include "zeno/thermal.hpp"

#include <cmath>
#include <sstream>

#include "zeno/blocks.hpp"
#include "zeno/detail/blocksum.hpp"
#include "zeno/detail/timegrid.hpp"
#include "zeno/reduce.hpp"

namespace zeno {

ModeWeights boltzmann_weights(double omega, double temperature,
                              double retain_target, long max_cutoff) {
  if (!(omega > 0.0)) throw NonPositiveFrequency("mode frequency must be > 0");
  if (!(retain_target > 0.0 && retain_target < 1.0))
    throw DomainError("retain target must lie in (0,1)");

  ModeWeights mw;
  if (temperature == 0.0) {
    mw.weights = {1.0};
    mw.cutoff = 0;
    mw.retained = 1.0;
    return mw;
  }

  const double lr = -omega / temperature;       // log of the Boltzmann ratio
  auto retained = [lr](long cutoff) {
    return -std::expm1(lr * double(cutoff + 1));  // 1 - r^(cutoff+1)
  };

  // Seed from the logarithm, then certify minimality by direct evaluation.
  long n = std::lround(std::ceil(std::log1p(-retain_target) / lr)) - 1;
  if (n < 0) n = 0;
  while (retained(n) < retain_target) {
    ++n;
    if (n > max_cutoff) break;
  }
  while (n > 0 && retained(n - 1) >= retain_target) --n;

  if (n > max_cutoff) {
    std::ostringstream os;
    os << "thermal cutoff " << n << " for mode omega=" << omega
       << " at T=" << temperature << " exceeds the cap " << max_cutoff;
    throw CutoffOverflow(os.str());
  }

  mw.cutoff = n;
  mw.retained = retained(n);
  mw.weights.resize(std::size_t(n) + 1);
  const double norm = -std::expm1(lr);  // 1 - r
  for (long k = 0; k <= n; ++k)
    mw.weights[std::size_t(k)] = norm * std::exp(lr * double(k));
  return mw;
}

double per_mode_retain_target(double tail_mass, int n_modes) {
  if (n_modes == 2) return std::sqrt(1.0 - tail_mass);
  return std::pow(1.0 - tail_mass, 1.0 / double(n_modes));
}

ThermalEnsemble build_ensemble(const ValidatedParams& params,
                               const Tolerances& tol) {
  tol.check();
  const double target = per_mode_retain_target(tol.tail_mass, 2);
  ModeWeights a = boltzmann_weights(params.omega_a(), params.temperature(),
                                    target, tol.max_cutoff);
  ModeWeights b = boltzmann_weights(params.omega_b(), params.temperature(),
                                    target, tol.max_cutoff);
  ThermalEnsemble e;
  e.cutoff_a = a.cutoff;
  e.cutoff_b = b.cutoff;
  e.discarded_mass = 1.0 - a.retained * b.retained;
  e.weights_a = std::move(a.weights);
  e.weights_b = std::move(b.weights);
  return e;
}

std::vector<double> uniform_times(double t_max, int points) {
  if (!(t_max > 0.0)) throw DomainError("t_max must be > 0");
  if (points < 2) throw DomainError("need at least 2 grid points");
  const double dt = t_max / double(points - 1);
  std::vector<double> t(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j) t[std::size_t(j)] = dt * double(j);
  return t;
}

SurvivalCurve survival_curve(const ValidatedParams& params,
                             const std::vector<double>& times,
                             const Tolerances& tol, int workers) {
  if (times.empty()) throw DomainError("empty time grid");
  if (times.front() < 0.0) throw DomainError("times must be >= 0");
  for (std::size_t j = 1; j < times.size(); ++j)
    if (!(times[j] > times[j - 1]))
      throw DomainError("times must be strictly ascending");

  const ThermalEnsemble ens = build_ensemble(params, tol);
  const detail::TimeGrid grid = detail::classify_times(times);

  const long nb1 = ens.cutoff_b + 1;
  const long n_items = (ens.cutoff_a + 1) * nb1;

  std::vector<double> a2(std::size_t(ens.cutoff_a) + 1);
  std::vector<double> b2(static_cast<std::size_t>(nb1));
  for (long n = 0; n <= ens.cutoff_a; ++n)
    a2[std::size_t(n)] = detail::eff_sq(params.g12(), n);
  for (long n = 0; n < nb1; ++n)
    b2[std::size_t(n)] = detail::eff_sq(params.g23(), n);

  const double delta = params.delta();
  const bool resonant = (delta == 0.0);

  auto item = [&](long i, CompensatedVector& acc) {
    const long na = i / nb1, nb = i % nb1;
    const double wgt =
        ens.weights_a[std::size_t(na)] * ens.weights_b[std::size_t(nb)];
    if (resonant) {
      detail::add_resonant_curve(a2[std::size_t(na)], b2[std::size_t(nb)],
                                 wgt, grid, acc);
    } else {
      detail::add_spectral_curve(
          detail::spectral_from_squares(a2[std::size_t(na)],
                                        b2[std::size_t(nb)], delta),
          wgt, grid, acc);
    }
  };

  SurvivalCurve curve;
  curve.times = times;
  curve.p1 = deterministic_reduce(n_items, times.size(), workers, item);
  for (double& p : curve.p1) p = std::clamp(p, 0.0, 1.0);

  Provenance& md = curve.metadata;
  md.add("mode",
         params.mode() == Mode::resonant ? "resonant" : "detuned");
  md.add("omega1", params.raw().omega1);
  md.add("omega2", params.raw().omega2);
  md.add("omega3", params.raw().omega3);
  md.add("omega_a", params.omega_a());
  md.add("omega_b", params.omega_b());
  md.add("g12", params.g12());
  md.add("g23", params.g23());
  md.add("delta", params.delta());
  md.add("temperature", params.temperature());
  md.add("tail_mass", tol.tail_mass);
  md.add("cutoff_a", ens.cutoff_a);
  md.add("cutoff_b", ens.cutoff_b);
  md.add("discarded_mass", ens.discarded_mass);
  md.add("points", long(times.size()));
  md.add("t_first", times.front());
  md.add("t_last", times.back());
  return curve;
}

}  // namespace zeno
