#include "zeno/io.hpp"

#include <fstream>

#include "json.hpp"
#include "zeno/version.hpp"

namespace zeno {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json metadata_object(const Provenance& metadata) {
  ordered_json md = ordered_json::object();
  md["tool"] = "zeno";
  md["version"] = kVersion;
  for (const auto& [k, v] : metadata.items()) md[k] = v;
  return md;
}

}  // namespace

std::string curve_to_csv(const SurvivalCurve& curve) {
  std::string out;
  out += "# tool=zeno\n";
  out += std::string("# version=") + kVersion + "\n";
  for (const auto& [k, v] : curve.metadata.items())
    out += "# " + k + "=" + v + "\n";
  out += "t,p1\n";
  for (std::size_t i = 0; i < curve.times.size(); ++i)
    out += format_double(curve.times[i]) + "," + format_double(curve.p1[i]) +
           "\n";
  return out;
}

std::string curve_to_json(const SurvivalCurve& curve) {
  ordered_json j;
  j["metadata"] = metadata_object(curve.metadata);
  j["series"]["t"] = curve.times;
  j["series"]["p1"] = curve.p1;
  return j.dump(2) + "\n";
}

std::string bound_report_to_json(const BoundReport& report,
                                 const Provenance& metadata) {
  ordered_json j;
  j["metadata"] = metadata_object(metadata);
  ordered_json r = ordered_json::object();
  r["epsilon"] = report.epsilon;
  r["chi"] = report.chi;
  r["alpha_eps"] = report.alpha_eps;
  r["beta_eps"] = report.beta_eps;
  r["eta"] = report.eta;
  r["finite_T_bound"] = report.finite_T_bound;
  r["high_T_bound"] = report.high_T_bound;
  r["validity"] = {report.validity[0], report.validity[1]};
  j["report"] = r;
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file '" + path + "'");
  out.write(content.data(), std::streamsize(content.size()));
  if (!out) throw DomainError("write failed for '" + path + "'");
}

}  // namespace zeno
