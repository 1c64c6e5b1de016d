#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "zeno/io.hpp"
#include "zeno/version.hpp"

using namespace zeno;

TEST_CASE("format_double round-trips every value bitwise") {
  for (double x : {0.0, 1.0, -1.0, 0.1, 1e-6, 1.0 / 3.0,
                   5.080024786707238e-06, 6.02e23, -2.5e-308,
                   4.9406564584124654e-324}) {
    const std::string s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-06) == "1e-06");
  CHECK(format_double(42.0) == "42");
}

namespace {

SurvivalCurve tiny_curve() {
  SurvivalCurve c;
  c.times = {0.0, 0.5, 1.0};
  c.p1 = {1.0, 0.25, 0.0625};
  c.metadata.add("mode", std::string("resonant"));
  c.metadata.add("temperature", 2.5);
  c.metadata.add("points", long(3));
  return c;
}

}  // namespace

TEST_CASE("CSV serialization is byte-exact") {
  const std::string expect =
      std::string("# tool=zeno\n# version=") + kVersion +
      "\n"
      "# mode=resonant\n"
      "# temperature=2.5\n"
      "# points=3\n"
      "t,p1\n"
      "0,1\n"
      "0.5,0.25\n"
      "1,0.0625\n";
  CHECK(curve_to_csv(tiny_curve()) == expect);
}

TEST_CASE("JSON curves parse back with numeric series") {
  const std::string text = curve_to_json(tiny_curve());
  CHECK(text.back() == '\n');
  const auto j = nlohmann::json::parse(text);
  CHECK(j["metadata"]["tool"] == "zeno");
  CHECK(j["metadata"]["version"] == kVersion);
  CHECK(j["metadata"]["temperature"] == "2.5");  // provenance stays textual
  REQUIRE(j["series"]["t"].size() == 3);
  REQUIRE(j["series"]["p1"].size() == 3);
  CHECK(j["series"]["t"][1].get<double>() == 0.5);
  CHECK(j["series"]["p1"][2].get<double>() == 0.0625);
}

TEST_CASE("JSON bound reports carry every field as numbers") {
  BoundReport r;
  r.epsilon = 0.3;
  r.chi = 4.7;
  r.alpha_eps = 22.0;
  r.beta_eps = 21.0;
  r.eta = 0.1;
  r.finite_T_bound = 0.33;
  r.high_T_bound = 0.31;
  r.validity = {0.088, 0.125};
  Provenance md;
  md.add("temperature", 250.0);

  const auto j = nlohmann::json::parse(bound_report_to_json(r, md));
  CHECK(j["metadata"]["tool"] == "zeno");
  CHECK(j["metadata"]["temperature"] == "250");
  CHECK(j["report"]["epsilon"].get<double>() == 0.3);
  CHECK(j["report"]["chi"].get<double>() == 4.7);
  CHECK(j["report"]["alpha_eps"].get<double>() == 22.0);
  CHECK(j["report"]["beta_eps"].get<double>() == 21.0);
  CHECK(j["report"]["eta"].get<double>() == 0.1);
  CHECK(j["report"]["finite_T_bound"].get<double>() == 0.33);
  CHECK(j["report"]["high_T_bound"].get<double>() == 0.31);
  REQUIRE(j["report"]["validity"].size() == 2);
  CHECK(j["report"]["validity"][0].get<double>() == 0.088);
  CHECK(j["report"]["validity"][1].get<double>() == 0.125);
}

TEST_CASE("write_file puts exact bytes on disk and reports failures") {
  const std::string path = "test_io_tmp.txt";
  write_file(path, "alpha\nbeta\n");
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  in.close();
  std::remove(path.c_str());
  CHECK(buf.str() == "alpha\nbeta\n");

  CHECK_THROWS_AS(write_file("no_such_dir_xyz/out.txt", "x"), DomainError);
}
