#include "zeno/multimode.hpp"

#include <cmath>
#include <sstream>

#include "zeno/blocks.hpp"
#include "zeno/detail/blocksum.hpp"
#include "zeno/detail/timegrid.hpp"
#include "zeno/reduce.hpp"

namespace zeno {

ValidatedMultimodeSpec validate(const MultimodeSpec& spec) {
  if (spec.modes_12.empty() || spec.modes_23.empty())
    throw DomainError("need at least one mode on each transition");
  for (const auto& m : spec.modes_12)
    if (!(m.frequency > 0.0))
      throw NonPositiveFrequency("1-2 mode frequency must be > 0, got " +
                                 std::to_string(m.frequency));
  for (const auto& m : spec.modes_23)
    if (!(m.frequency > 0.0))
      throw NonPositiveFrequency("2-3 mode frequency must be > 0, got " +
                                 std::to_string(m.frequency));
  if (!(spec.temperature >= 0.0))
    throw DomainError("temperature must be >= 0");

  double b12 = spec.bohr_12;
  if (std::isnan(b12)) b12 = spec.modes_12.front().frequency;
  double b23 = spec.bohr_23;
  if (std::isnan(b23)) b23 = spec.modes_23.front().frequency;
  if (!(b12 > 0.0) || !(b23 > 0.0))
    throw NonPositiveFrequency("atomic splittings must be > 0");
  return ValidatedMultimodeSpec(spec, b12, b23);
}

MultiBlockMatrix build_multiblock(const ValidatedMultimodeSpec& spec,
                                  const MultiBlockIndex& idx, int max_dim) {
  const int p = spec.p(), q = spec.q();
  if (long(idx.n_vec.size()) != p || long(idx.m_vec.size()) != q)
    throw DomainError("occupation vector lengths must match the mode lists");
  for (long n : idx.n_vec)
    if (n < 0) throw DomainError("occupations must be nonnegative");
  for (long m : idx.m_vec)
    if (m < 0) throw DomainError("occupations must be nonnegative");

  const long dim = 1L + p + long(p) * q;
  if (dim > max_dim) {
    std::ostringstream os;
    os << "block dimension " << dim << " exceeds the cap " << max_dim;
    throw DimensionOverflow(os.str());
  }

  MultiBlockMatrix out;
  out.p = p;
  out.q = q;
  out.mat = Eigen::MatrixXd::Zero(dim, dim);

  for (int k = 0; k < p; ++k) {
    const auto& mode = spec.raw().modes_12[std::size_t(k)];
    const double alpha =
        std::abs(mode.coupling) * std::sqrt(double(idx.n_vec[std::size_t(k)]) + 1.0);
    const double dk = mode.frequency - spec.bohr_12();
    out.mat(0, 1 + k) = out.mat(1 + k, 0) = alpha;
    out.mat(1 + k, 1 + k) = dk;
    for (int l = 0; l < q; ++l) {
      const auto& mode23 = spec.raw().modes_23[std::size_t(l)];
      const double beta = std::abs(mode23.coupling) *
                          std::sqrt(double(idx.m_vec[std::size_t(l)]) + 1.0);
      const int j = 1 + p + k * q + l;
      out.mat(1 + k, j) = out.mat(j, 1 + k) = beta;
      out.mat(j, j) = dk + (mode23.frequency - spec.bohr_23());
    }
  }
  if (!out.mat.allFinite())
    throw DomainError("block entries overflow double arithmetic");
  return out;
}

namespace {

struct MultiSpectral {
  std::vector<double> lambda;
  std::vector<double> weight;  // <e1|v_i>^2
};

MultiSpectral dense_spectral(const Eigen::MatrixXd& mat) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mat);
  if (es.info() != Eigen::Success)
    throw ConvergenceFailure("dense symmetric eigensolve failed");
  MultiSpectral out;
  const auto n = mat.rows();
  out.lambda.resize(std::size_t(n));
  out.weight.resize(std::size_t(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    out.lambda[std::size_t(i)] = es.eigenvalues()[i];
    const double c = es.eigenvectors()(0, i);
    out.weight[std::size_t(i)] = c * c;
  }
  return out;
}

}  // namespace

double survival_probability_multiblock(const MultiBlockMatrix& block,
                                       double t) {
  const MultiSpectral sp = dense_spectral(block.mat);
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < sp.lambda.size(); ++i) {
    re += sp.weight[i] * std::cos(sp.lambda[i] * t);
    im += sp.weight[i] * std::sin(sp.lambda[i] * t);
  }
  return std::clamp(re * re + im * im, 0.0, 1.0);
}

Eigen::VectorXd multiblock_populations(const MultiBlockMatrix& block,
                                       double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block.mat);
  if (es.info() != Eigen::Success)
    throw ConvergenceFailure("dense symmetric eigensolve failed");
  const auto n = block.mat.rows();
  Eigen::VectorXd pops(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double re = 0.0, im = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double c = es.eigenvectors()(j, i) * es.eigenvectors()(0, i);
      re += c * std::cos(es.eigenvalues()[i] * t);
      im += c * std::sin(es.eigenvalues()[i] * t);
    }
    pops[j] = re * re + im * im;
  }
  return pops;
}

namespace {

struct ThermalGrid {
  std::vector<ModeWeights> modes;  // nu modes first, then mu modes
  long n_items = 1;
  double discarded = 0.0;
};

ThermalGrid build_grid(const ValidatedMultimodeSpec& spec,
                       const Tolerances& tol) {
  tol.check();
  const int n_modes = spec.p() + spec.q();
  const double target = per_mode_retain_target(tol.tail_mass, n_modes);
  ThermalGrid g;
  double retained = 1.0;
  for (const auto& m : spec.raw().modes_12) {
    g.modes.push_back(boltzmann_weights(m.frequency, spec.temperature(),
                                        target, tol.max_cutoff));
    retained *= g.modes.back().retained;
  }
  for (const auto& m : spec.raw().modes_23) {
    g.modes.push_back(boltzmann_weights(m.frequency, spec.temperature(),
                                        target, tol.max_cutoff));
    retained *= g.modes.back().retained;
  }
  g.discarded = 1.0 - retained;
  for (const auto& mw : g.modes) {
    const long width = mw.cutoff + 1;
    if (g.n_items > tol.max_blocks / width) {
      g.n_items = tol.max_blocks + 1;  // saturated: caller will refuse anyway
      break;
    }
    g.n_items *= width;
  }
  return g;
}

}  // namespace

long multiblock_count(const ValidatedMultimodeSpec& spec,
                      const Tolerances& tol) {
  return build_grid(spec, tol).n_items;
}

SurvivalCurve thermal_survival(const ValidatedMultimodeSpec& spec,
                               const std::vector<double>& times,
                               const Tolerances& tol, int workers) {
  if (times.empty()) throw DomainError("empty time grid");
  if (times.front() < 0.0) throw DomainError("times must be >= 0");
  for (std::size_t j = 1; j < times.size(); ++j)
    if (!(times[j] > times[j - 1]))
      throw DomainError("times must be strictly ascending");

  const ThermalGrid grid = build_grid(spec, tol);
  if (grid.n_items > tol.max_blocks) {
    std::ostringstream os;
    os << "thermal product grid needs more than " << tol.max_blocks
       << " blocks; raise max_blocks or the tail mass";
    throw CutoffOverflow(os.str());
  }

  const detail::TimeGrid tgrid = detail::classify_times(times);
  const int p = spec.p(), q = spec.q();
  const int n_modes = p + q;

  // Fast path: the default resonant-1-2 single-mode pair is exactly the
  // two-oscillator block, evaluated through the identical closed forms so
  // the two modules agree bitwise.
  const bool tridiag_path =
      (p == 1 && q == 1 &&
       spec.raw().modes_12[0].frequency - spec.bohr_12() == 0.0);
  const double delta23 =
      q == 1 ? spec.raw().modes_23[0].frequency - spec.bohr_23() : 0.0;

  // strides for the canonical odometer (first mode most significant)
  std::vector<long> widths(static_cast<std::size_t>(n_modes));
  for (int i = 0; i < n_modes; ++i)
    widths[std::size_t(i)] = grid.modes[std::size_t(i)].cutoff + 1;

  MultiBlockIndex idx;
  idx.n_vec.assign(std::size_t(p), 0);
  idx.m_vec.assign(std::size_t(q), 0);

  const double g12 = spec.raw().modes_12[0].coupling;
  const double g23 = spec.raw().modes_23[0].coupling;

  auto item = [&](long item_index, CompensatedVector& acc) {
    // decode occupations, least significant (last mu mode) first
    thread_local std::vector<long> digits;
    digits.assign(std::size_t(n_modes), 0);
    long rem = item_index;
    for (int i = n_modes - 1; i >= 0; --i) {
      digits[std::size_t(i)] = rem % widths[std::size_t(i)];
      rem /= widths[std::size_t(i)];
    }
    double wgt = 1.0;
    for (int i = 0; i < n_modes; ++i)
      wgt *= grid.modes[std::size_t(i)].weights[std::size_t(digits[std::size_t(i)])];

    if (tridiag_path) {
      const double a2 = detail::eff_sq(g12, digits[0]);
      const double b2 = detail::eff_sq(g23, digits[1]);
      if (delta23 == 0.0) {
        detail::add_resonant_curve(a2, b2, wgt, tgrid, acc);
      } else {
        detail::add_spectral_curve(
            detail::spectral_from_squares(a2, b2, delta23), wgt, tgrid, acc);
      }
      return;
    }

    MultiBlockIndex local = idx;  // thread-local copy, sizes preset
    for (int k = 0; k < p; ++k) local.n_vec[std::size_t(k)] = digits[std::size_t(k)];
    for (int l = 0; l < q; ++l)
      local.m_vec[std::size_t(l)] = digits[std::size_t(p + l)];
    const MultiBlockMatrix block = build_multiblock(spec, local, tol.max_dim);
    const MultiSpectral sp = dense_spectral(block.mat);
    detail::add_amplitude_curve(sp.lambda, sp.weight, wgt, tgrid, acc);
  };

  SurvivalCurve curve;
  curve.times = times;
  curve.p1 = deterministic_reduce(grid.n_items, times.size(), workers, item);
  for (double& v : curve.p1) v = std::clamp(v, 0.0, 1.0);

  Provenance& md = curve.metadata;
  md.add("p", long(p));
  md.add("q", long(q));
  md.add("bohr_12", spec.bohr_12());
  md.add("bohr_23", spec.bohr_23());
  for (int k = 0; k < p; ++k) {
    const auto& m = spec.raw().modes_12[std::size_t(k)];
    const std::string tag = "mode_12_" + std::to_string(k + 1);
    md.add(tag + "_freq", m.frequency);
    md.add(tag + "_g", m.coupling);
    md.add(tag + "_cutoff", grid.modes[std::size_t(k)].cutoff);
  }
  for (int l = 0; l < q; ++l) {
    const auto& m = spec.raw().modes_23[std::size_t(l)];
    const std::string tag = "mode_23_" + std::to_string(l + 1);
    md.add(tag + "_freq", m.frequency);
    md.add(tag + "_g", m.coupling);
    md.add(tag + "_cutoff", grid.modes[std::size_t(p + l)].cutoff);
  }
  md.add("temperature", spec.temperature());
  md.add("tail_mass", tol.tail_mass);
  md.add("blocks", grid.n_items);
  md.add("discarded_mass", grid.discarded);
  md.add("points", long(times.size()));
  md.add("t_first", times.front());
  md.add("t_last", times.back());
  return curve;
}

SurvivalCurve thermal_survival_1xq(const ValidatedMultimodeSpec& spec,
                                   const std::vector<double>& times,
                                   const Tolerances& tol, int workers) {
  if (spec.p() != 1)
    throw DomainError("thermal_survival_1xq needs exactly one 1-2 mode");
  return thermal_survival(spec, times, tol, workers);
}

}  // namespace zeno
