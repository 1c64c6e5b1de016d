// Command-line front end: survival curves, closed-form bounds, parameter
// sweeps, multimode runs, and the canned figure datasets.  All numerical
// work lives in the library; this file only assembles parameters (config
// file first, explicit flags override), runs one command, and serializes.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "zeno/config.hpp"
#include "zeno/io.hpp"
#include "zeno/multimode.hpp"
#include "zeno/presets.hpp"
#include "zeno/version.hpp"

namespace {

using namespace zeno;

// Collects (config key, raw value) pairs from flags the user actually
// passed.  Values stay strings so flags and config lines share one parsing
// path (and one precision story).
class FlagKeys {
 public:
  explicit FlagKeys(CLI::App* cmd) : cmd_(cmd) {}

  CLI::Option* add(const std::string& names, const std::string& key,
                   const std::string& help) {
    auto* opt = cmd_->add_option(names, help);
    opt->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    opts_.emplace_back(key, opt);
    return opt;
  }

  CLI::Option* add_repeatable(const std::string& names,
                              const std::string& key,
                              const std::string& help) {
    auto* opt = cmd_->add_option(names, help);
    opt->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    opts_.emplace_back(key, opt);
    return opt;
  }

  void add_model_keys() {
    add("--mode", "mode", "resonant | detuned");
    add("--omega_a,--omega-a", "omega_a", "1-2 oscillator frequency");
    add("--omega_b,--omega-b", "omega_b", "2-3 oscillator frequency");
    add("--g12", "g12", "1-2 coupling");
    add("--g23", "g23", "2-3 coupling");
    add("--delta", "delta", "detuning omega_b - (omega2 - omega3)");
    add("--temperature,-T", "temperature", "bath temperature");
    add("--omega1", "omega1", "level 1 energy (give all three or none)");
    add("--omega2", "omega2", "level 2 energy");
    add("--omega3", "omega3", "level 3 energy");
  }

  void add_grid_keys() {
    add("--t-max,--t_max", "t_max", "time grid endpoint (grid starts at 0)");
    add("--points", "points", "time grid size");
    add("--tail-mass,--tail_mass", "tail_mass",
        "max discarded thermal weight");
    add("--workers", "workers", "worker threads (0 = hardware)");
  }

  // Flag pairs in command-line order; appended after config entries so the
  // last occurrence of a scalar key is the flag's.
  KeyValues harvest() const {
    KeyValues kv;
    for (const auto& [key, opt] : opts_)
      for (const auto& s : opt->results()) kv.emplace_back(key, s);
    return kv;
  }

 private:
  CLI::App* cmd_;
  std::vector<std::pair<std::string, CLI::Option*>> opts_;
};

KeyValues merged_keys(const std::string& config_path, const FlagKeys& flags) {
  KeyValues kv;
  if (!config_path.empty()) kv = parse_config_file(config_path);
  KeyValues fl = flags.harvest();
  // A flag-side mode list replaces the config-side list wholesale; mixing
  // the two would silently grow the mode families.
  for (const char* prefix : {"mode_12.", "mode_23."}) {
    const bool flagged = std::any_of(fl.begin(), fl.end(), [&](auto& e) {
      return e.first.rfind(prefix, 0) == 0;
    });
    if (flagged)
      std::erase_if(kv, [&](auto& e) { return e.first.rfind(prefix, 0) == 0; });
  }
  kv.insert(kv.end(), fl.begin(), fl.end());
  return kv;
}

void check_format(const std::string& fmt) {
  if (fmt != "csv" && fmt != "json")
    throw DomainError("format must be 'csv' or 'json', got '" + fmt + "'");
}

std::string serialize_curve(const SurvivalCurve& curve,
                            const std::string& fmt) {
  return fmt == "csv" ? curve_to_csv(curve) : curve_to_json(curve);
}

std::string meta_value(const Provenance& md, const std::string& key) {
  for (const auto& [k, v] : md.items())
    if (k == key) return v;
  return "?";
}

Tolerances tolerances_from(const KeyValues& kv) {
  Tolerances tol;
  tol.tail_mass = get_double(kv, "tail_mass", tol.tail_mass);
  tol.check();
  return tol;
}

std::vector<double> grid_from(const KeyValues& kv) {
  return uniform_times(get_double(kv, "t_max", 20.0),
                       get_int(kv, "points", 400));
}

double mean_from(const std::vector<double>& v, std::size_t from) {
  double s = 0.0;
  for (std::size_t i = from; i < v.size(); ++i) s += v[i];
  return s / double(v.size() - from);
}

// ---- survival ---------------------------------------------------------

struct SurvivalCmd {
  std::string config, out, format = "csv";
  std::unique_ptr<FlagKeys> keys;

  void run() const {
    check_format(format);
    const KeyValues kv = merged_keys(config, *keys);
    auto [mp, mode] = params_from_config(kv);
    const ValidatedParams vp = validate(mp, mode);
    const Tolerances tol = tolerances_from(kv);
    const SurvivalCurve curve =
        survival_curve(vp, grid_from(kv), tol, get_int(kv, "workers", 0));
    const std::string path = out.empty() ? "survival." + format : out;
    write_file(path, serialize_curve(curve, format));
    std::cout << "wrote " << path
              << " cutoff_a=" << meta_value(curve.metadata, "cutoff_a")
              << " cutoff_b=" << meta_value(curve.metadata, "cutoff_b")
              << " discarded_mass="
              << meta_value(curve.metadata, "discarded_mass") << "\n";
  }
};

// ---- bound ------------------------------------------------------------

struct BoundCmd {
  std::string config, out;
  bool compare = false;
  std::unique_ptr<FlagKeys> keys;

  void run() const {
    const KeyValues kv = merged_keys(config, *keys);
    auto [mp, mode] = params_from_config(kv);
    const ValidatedParams vp = validate(mp, mode);

    const bool fixed_eps = has_key(kv, "eps");
    const BoundReport report = fixed_eps
                                   ? bound_report(vp, get_double(kv, "eps", 0.1))
                                   : best_bound(vp);

    std::cout << "epsilon=" << format_double(report.epsilon)
              << (fixed_eps ? "" : " (maximizes the bound)") << "\n"
              << "chi=" << format_double(report.chi)
              << " alpha=" << format_double(report.alpha_eps)
              << " beta=" << format_double(report.beta_eps)
              << " eta=" << format_double(report.eta) << "\n"
              << "finite_T_bound=" << format_double(report.finite_T_bound)
              << "\n"
              << "high_T_bound=" << format_double(report.high_T_bound) << "\n"
              << "validity=" << format_double(report.validity[0]) << ","
              << format_double(report.validity[1]) << "\n";
    if (report.validity[0] >= 0.1 || report.validity[1] >= 0.1)
      std::cout << "not in high-T regime (a validity ratio is >= 0.1; the "
                   "high-T floor is unreliable here)\n";

    Provenance md;
    md.add("mode", vp.mode() == Mode::resonant ? "resonant" : "detuned");
    md.add("omega_a", vp.omega_a());
    md.add("omega_b", vp.omega_b());
    md.add("g12", vp.g12());
    md.add("g23", vp.g23());
    md.add("delta", vp.delta());
    md.add("temperature", vp.temperature());
    md.add("epsilon_choice", fixed_eps ? "fixed" : "best");
    const std::string path = out.empty() ? "bound.json" : out;
    write_file(path, bound_report_to_json(report, md));
    std::cout << "wrote " << path << "\n";

    if (compare) {
      const Tolerances tol = tolerances_from(kv);
      const SurvivalCurve curve = survival_curve(
          vp, grid_from(kv), tol, get_int(kv, "workers", 0));
      const double exact_min =
          *std::min_element(curve.p1.begin(), curve.p1.end());
      std::vector<double> eps_list = {0.05, 0.1, 0.3, 0.5};
      if (std::find(eps_list.begin(), eps_list.end(), report.epsilon) ==
          eps_list.end())
        eps_list.push_back(report.epsilon);
      std::sort(eps_list.begin(), eps_list.end());
      std::string table = "eps,bound,exact_min,margin\n";
      for (double e : eps_list) {
        const double b = finite_T_lower_bound(vp, e);
        table += format_double(e) + "," + format_double(b) + "," +
                 format_double(exact_min) + "," +
                 format_double(exact_min - b) + "\n";
      }
      std::cout << table;
      std::string cmp_path = path;
      if (cmp_path.size() > 5 && cmp_path.ends_with(".json"))
        cmp_path.resize(cmp_path.size() - 5);
      cmp_path += "_compare.csv";
      write_file(cmp_path, table);
      std::cout << "wrote " << cmp_path << "\n";
    }
  }
};

// ---- sweep ------------------------------------------------------------

struct SweepCmd {
  std::string config, out;
  std::unique_ptr<FlagKeys> keys;

  void run() const {
    const KeyValues kv = merged_keys(config, *keys);
    const std::string param = get_string(kv, "sweep.param", "");
    const std::vector<double> values =
        parse_double_list(get_string(kv, "sweep.values", ""));
    static const std::vector<std::string> sweepable = {
        "temperature", "delta", "omega_a", "omega_b", "g12", "g23"};
    if (param.empty() || values.empty())
      throw DomainError(
          "empty sweep grid: need sweep.param (one of temperature, delta, "
          "omega_a, omega_b, g12, g23) and a nonempty sweep.values list");
    if (std::find(sweepable.begin(), sweepable.end(), param) ==
        sweepable.end())
      throw DomainError("cannot sweep '" + param + "'");

    const Tolerances tol = tolerances_from(kv);
    const std::vector<double> times = grid_from(kv);
    const int workers = get_int(kv, "workers", 0);

    std::string csv = "# tool=zeno\n# version=" + std::string(kVersion) +
                      "\n# sweep.param=" + param + "\n# sweep.values=" +
                      get_string(kv, "sweep.values", "") + "\n";
    for (const char* k : {"mode", "omega_a", "omega_b", "g12", "g23",
                          "delta", "temperature", "t_max", "points",
                          "tail_mass"})
      if (has_key(kv, k)) csv += "# " + std::string(k) + "=" +
                                 get_string(kv, k, "") + "\n";
    csv += "param,value,min_p1,mean_p1,tail_mean_p1\n";

    for (double v : values) {
      KeyValues point = kv;
      // A detuning sweep only makes sense in the detuned mode; switch the
      // default (an explicit mode key still wins, and still validates).
      if (param == "delta" && !has_key(kv, "mode"))
        point.emplace_back("mode", "detuned");
      point.emplace_back(param, format_double(v));
      auto [mp, mode] = params_from_config(point);
      const SurvivalCurve curve =
          survival_curve(validate(mp, mode), times, tol, workers);
      const double mn = *std::min_element(curve.p1.begin(), curve.p1.end());
      const double mean = mean_from(curve.p1, 0);
      const double tail =
          mean_from(curve.p1, curve.p1.size() - curve.p1.size() / 4);
      csv += param + "," + format_double(v) + "," + format_double(mn) + "," +
             format_double(mean) + "," + format_double(tail) + "\n";
      std::cout << param << "=" << format_double(v)
                << " min_p1=" << format_double(mn) << "\n";
    }
    const std::string path = out.empty() ? "sweep.csv" : out;
    write_file(path, csv);
    std::cout << "wrote " << path << "\n";
  }
};

// ---- multimode --------------------------------------------------------

struct MultimodeCmd {
  std::string config, out, format = "csv";
  bool force = false;
  std::unique_ptr<FlagKeys> keys;

  void run() const {
    check_format(format);
    const KeyValues kv = merged_keys(config, *keys);
    const ValidatedMultimodeSpec spec = validate(multimode_from_config(kv));
    const Tolerances tol = tolerances_from(kv);
    const long blocks = multiblock_count(spec, tol);
    if (spec.p() > 1 && !force)
      throw DomainError(
          "p = " + std::to_string(spec.p()) +
          " modes on the 1-2 transition expand to " + std::to_string(blocks) +
          " thermal blocks of dimension " +
          std::to_string(1 + spec.p() + spec.p() * spec.q()) +
          "; rerun with --force to accept the cost");
    const SurvivalCurve curve = thermal_survival(
        spec, grid_from(kv), tol, get_int(kv, "workers", 0));
    const std::string path = out.empty() ? "multimode." + format : out;
    write_file(path, serialize_curve(curve, format));
    std::cout << "wrote " << path
              << " blocks=" << meta_value(curve.metadata, "blocks")
              << " discarded_mass="
              << meta_value(curve.metadata, "discarded_mass") << "\n";
  }
};

// ---- figure -----------------------------------------------------------

struct FigureCmd {
  std::string preset, out_dir = ".", format = "csv";
  int workers = 0;
  int points = 0;       // 0 = preset default
  double t_max = 0.0;   // 0 = preset default
  double tail_mass = 0.0;  // 0 = per-curve default

  void run() const {
    check_format(format);
    const FigurePreset fp = figure_preset(preset);
    std::filesystem::create_directories(out_dir);
    const std::vector<double> times =
        uniform_times(t_max > 0.0 ? t_max : fp.t_max,
                      points > 0 ? points : fp.points);
    for (const FigureCurve& fc : fp.curves) {
      Tolerances tol;
      tol.tail_mass = tail_mass > 0.0 ? tail_mass : fc.tail_mass;
      tol.check();
      const SurvivalCurve curve =
          survival_curve(validate(fc.params, fc.mode), times, tol, workers);
      const std::string path =
          out_dir + "/" + fp.name + "_" + fc.label + "." + format;
      write_file(path, serialize_curve(curve, format));
      std::cout << "wrote " << path
                << " cutoff_a=" << meta_value(curve.metadata, "cutoff_a")
                << " cutoff_b=" << meta_value(curve.metadata, "cutoff_b")
                << " discarded_mass="
                << meta_value(curve.metadata, "discarded_mass") << "\n";
    }
  }
};

int report_error(const Error& e) {
  const char* kind = "Error";
  if (dynamic_cast<const NonPositiveFrequency*>(&e))
    kind = "NonPositiveFrequency";
  else if (dynamic_cast<const ResonanceViolation*>(&e))
    kind = "ResonanceViolation";
  else if (dynamic_cast<const ZeroCoupling*>(&e))
    kind = "ZeroCoupling";
  else if (dynamic_cast<const CutoffOverflow*>(&e))
    kind = "CutoffOverflow";
  else if (dynamic_cast<const DimensionOverflow*>(&e))
    kind = "DimensionOverflow";
  else if (dynamic_cast<const ConvergenceFailure*>(&e))
    kind = "ConvergenceFailure";
  else if (dynamic_cast<const DomainError*>(&e))
    kind = "DomainError";
  std::cerr << "error: " << kind << ": " << e.what() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "three-level system in thermal oscillator baths: exact block "
      "dynamics, survival bounds, figure data"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto survival = std::make_shared<SurvivalCmd>();
  {
    CLI::App* cmd = app.add_subcommand(
        "survival", "thermal survival probability curve");
    cmd->add_option("--config", survival->config, "key=value config file");
    cmd->add_option("--out", survival->out, "output path");
    cmd->add_option("--format", survival->format, "csv | json");
    survival->keys = std::make_unique<FlagKeys>(cmd);
    survival->keys->add_model_keys();
    survival->keys->add_grid_keys();
    cmd->callback([survival] { survival->run(); });
  }

  auto bound = std::make_shared<BoundCmd>();
  {
    CLI::App* cmd = app.add_subcommand(
        "bound", "closed-form lower bounds on the survival probability");
    cmd->add_option("--config", bound->config, "key=value config file");
    cmd->add_option("--out", bound->out, "output path (JSON)");
    cmd->add_flag("--compare", bound->compare,
                  "also tabulate bound vs exact curve minimum");
    bound->keys = std::make_unique<FlagKeys>(cmd);
    bound->keys->add_model_keys();
    bound->keys->add_grid_keys();
    bound->keys->add("--eps", "eps",
                     "fixed epsilon (omit to maximize over epsilon)");
    cmd->callback([bound] { bound->run(); });
  }

  auto sweep = std::make_shared<SweepCmd>();
  {
    CLI::App* cmd = app.add_subcommand(
        "sweep", "survival statistics over a parameter grid");
    cmd->add_option("--config", sweep->config, "key=value config file");
    cmd->add_option("--out", sweep->out, "output path (long-format CSV)");
    sweep->keys = std::make_unique<FlagKeys>(cmd);
    sweep->keys->add_model_keys();
    sweep->keys->add_grid_keys();
    sweep->keys->add("--param", "sweep.param", "parameter to sweep");
    sweep->keys->add("--values", "sweep.values",
                     "comma-separated parameter values");
    cmd->callback([sweep] { sweep->run(); });
  }

  auto multimode = std::make_shared<MultimodeCmd>();
  {
    CLI::App* cmd = app.add_subcommand(
        "multimode", "thermal survival with several modes per transition");
    cmd->add_option("--config", multimode->config, "key=value config file");
    cmd->add_option("--out", multimode->out, "output path");
    cmd->add_option("--format", multimode->format, "csv | json");
    cmd->add_flag("--force", multimode->force,
                  "run even when p > 1 makes the block grid large");
    multimode->keys = std::make_unique<FlagKeys>(cmd);
    multimode->keys->add_grid_keys();
    multimode->keys->add("--temperature,-T", "temperature",
                         "bath temperature");
    multimode->keys->add("--bohr_12", "bohr_12", "omega1 - omega2");
    multimode->keys->add("--bohr_23", "bohr_23", "omega2 - omega3");
    multimode->keys->add_repeatable("--mode_12.freq", "mode_12.freq",
                                    "1-2 mode frequency (repeatable)");
    multimode->keys->add_repeatable("--mode_12.g", "mode_12.g",
                                    "1-2 mode coupling (repeatable)");
    multimode->keys->add_repeatable("--mode_23.freq", "mode_23.freq",
                                    "2-3 mode frequency (repeatable)");
    multimode->keys->add_repeatable("--mode_23.g", "mode_23.g",
                                    "2-3 mode coupling (repeatable)");
    cmd->callback([multimode] { multimode->run(); });
  }

  auto figure = std::make_shared<FigureCmd>();
  {
    CLI::App* cmd = app.add_subcommand(
        "figure", "write the canned survival datasets (fig2a, fig2b, fig3, "
                  "fig4a, fig4b)");
    cmd->add_option("preset", figure->preset, "preset name")->required();
    cmd->add_option("--out-dir", figure->out_dir, "output directory");
    cmd->add_option("--format", figure->format, "csv | json");
    cmd->add_option("--workers", figure->workers,
                    "worker threads (0 = hardware)");
    cmd->add_option("--points", figure->points, "override grid size");
    cmd->add_option("--t-max", figure->t_max, "override grid endpoint");
    cmd->add_option("--tail-mass", figure->tail_mass,
                    "override every curve's tail mass");
    cmd->callback([figure] { figure->run(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
