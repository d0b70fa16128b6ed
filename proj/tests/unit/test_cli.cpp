#include "app.hpp"
#include "boxideal/errors.hpp"
#include "boxideal/serialize.hpp"

#include <doctest.h>

using namespace boxideal;
using boxideal::cli::RunConfig;
using boxideal::cli::run_command;

namespace {

RunConfig config(const std::string& command, const std::string& target) {
  RunConfig c;
  c.command = command;
  c.target = target;
  return c;
}

std::string data(const char* name) { return std::string(BOXIDEAL_TEST_DATA) + "/" + name; }

json run_json(const RunConfig& c, int expect_code) {
  auto r = run_command(c);
  CHECK(r.exit_code == expect_code);
  json j = json::parse(r.output);
  CHECK(j["schema"] == 1);
  return j;
}

} // namespace

TEST_CASE("rational and variable text") {
  CHECK(rational_string(Rational(-6, 4)) == "-3/2");
  CHECK(rational_string(Rational(5)) == "5");
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("4/2") == 2);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(parse_variable("x[1,12]").name() == "x[1,12]");
  CHECK(parse_variable("w3").name() == "w3");
}

TEST_CASE("ideals round-trip through JSON") {
  BoxMatrix a = BoxMatrix::generic(Box::parse("2x2x2"));
  Ideal i = all_minors(a);
  json j = ideal_to_json(i);
  CHECK(j["order"] == "degrevlex/first_smallest");
  CHECK(j["groebner"] == false);
  Ideal back = ideal_from_json(j);
  CHECK(back.generators() == i.generators());
  CHECK(back.ring()->vars() == a.ring()->vars());

  Ideal gb = buchberger(i);
  Ideal gb_back = ideal_from_json(ideal_to_json(gb));
  CHECK(gb_back.is_groebner());
  CHECK(gb_back.generators() == gb.generators());

  // A false Groebner claim is rejected on input.
  json lie = j;
  lie["groebner"] = true;
  lie["generators"] = json::array({"x[1,1,1]*x[2,2,2] - x[1,2,2]*x[2,1,1]", "x[1,1,2]^2 - x[1,1,1]*x[2,2,2]"});
  CHECK_THROWS(ideal_from_json(lie));
}

TEST_CASE("tensors round-trip through JSON") {
  ConcreteTensor t(Box::parse("2x2x3"));
  t.values[1] = Rational(-1, 3);
  t.values[11] = 7;
  json j = tensor_to_json(t);
  CHECK(j["entries"].size() == 2);
  ConcreteTensor back = tensor_from_json(j);
  CHECK(back.box == t.box);
  CHECK(back.values == t.values);
  CHECK_THROWS_AS(tensor_from_json(json::parse(R"({"sizes":[2,2],"entries":[{"pos":[3,1],"value":"1"}]})")),
                  ParseError);
  CHECK_THROWS_AS(tensor_from_json(json::parse(R"({"entries":[]})")), ParseError);
}

TEST_CASE("minors command") {
  json a = run_json(config("minors", "2x2"), 0);
  CHECK(a["count"] == 1);
  json b = run_json(config("minors", "2x2x2"), 0);
  CHECK(b["count"] == 12);
  CHECK(b["per_axis"] == json::array({6, 6, 6}));
  CHECK(b["ideal"]["generators"].size() == 12);
  json c = run_json(config("minors", "1x5"), 0);
  CHECK(c["count"] == 0);
  CHECK(c["ideal"]["generators"].empty());
  json bad = run_json(config("minors", "2x"), 2);
  CHECK(bad["error"]["kind"] == "input");
}

TEST_CASE("gb-verify command") {
  for (const char* spec : {"2x3", "2x2x3"}) {
    json j = run_json(config("gb-verify", spec), 0);
    CHECK(j["is_groebner"] == true);
    CHECK(j["certificate"].is_null());
  }
  RunConfig m = config("gb-verify", "2x3");
  m.mutate = true;
  json j = run_json(m, 1);
  CHECK(j["is_groebner"] == false);
  CHECK(j["certificate"]["remainder"] != "0");
  RunConfig poor = config("gb-verify", "2x2x3");
  poor.budget_spairs = 0;
  poor.mutate = true;
  CHECK(run_json(poor, 3)["error"]["kind"] == "budget");
}

TEST_CASE("hilbert command") {
  RunConfig c = config("hilbert", "2x2x2");
  c.tmax = 3;
  json j = run_json(c, 0);
  REQUIRE(j["rows"].size() == 4);
  for (const auto& row : j["rows"])
    CHECK(row["agree"] == true);
  CHECK(j["rows"][0]["formula_ideal"] == "0");
  CHECK(j["rows"][0]["formula_quotient"] == "1");
  CHECK(j["codimension"] == 4);
  CHECK(j["grade_formula"] == 4);

  RunConfig d = config("hilbert", "3x3");
  d.tmax = 2;
  json k = run_json(d, 0);
  CHECK(k["rows"][2]["enumerated_ideal"] == "9");
}

TEST_CASE("segre-kernel command") {
  CHECK(run_json(config("segre-kernel", "2x2"), 0)["equal"] == true);
  CHECK(run_json(config("segre-kernel", "2x2x2"), 0)["equal"] == true);
  CHECK(run_json(config("segre-kernel", "4x4"), 3)["error"]["kind"] == "gate");
  RunConfig wide = config("segre-kernel", "2x2x3");
  wide.gate_positions = 12;
  CHECK(run_json(wide, 0)["equal"] == true);
}

TEST_CASE("decompose command") {
  json a = run_json(config("decompose", data("rank_one.json")), 0);
  CHECK(a["decomposable"] == true);
  CHECK(a["factors"].size() == 2);
  json b = run_json(config("decompose", data("perturbed.json")), 0);
  CHECK(b["decomposable"] == false);
  CHECK(b["witness"]["value"] != "0");
  CHECK(run_json(config("decompose", data("sparse_3d.json")), 0)["decomposable"] == true);
  CHECK(run_json(config("decompose", data("zero.json")), 2)["error"]["kind"] == "input");
  CHECK(run_json(config("decompose", data("malformed.json")), 2)["error"]["kind"] == "input");
  CHECK(run_json(config("decompose", data("missing.json")), 2)["error"]["kind"] == "input");
}

TEST_CASE("blowup command") {
  RunConfig c = config("blowup", "");
  c.d = 2;
  c.n = 1;
  c.seed = 7;
  json j = run_json(c, 0);
  CHECK(j["model"]["relations"].size() == 2);
  CHECK(j["model"]["ideal"]["generators"].size() == 11);
  CHECK(j["vanishing"]["passed"] == true);
  CHECK(j["surface"]["complete"] == true);
  CHECK(j["weak_box"]["gating"] == false);

  RunConfig s = config("blowup", "");
  json k = run_json(s, 0);
  CHECK(k["surface"]["degree"] == "3");

  RunConfig tight = config("blowup", "");
  tight.d = 2;
  tight.n = 2;
  tight.budget_spairs = 5;
  json p = run_json(tight, 3);
  CHECK(p["surface"]["complete"] == false);
  CHECK(p["vanishing"]["passed"] == true);
  CHECK(p["passed"] == false);

  RunConfig bad = config("blowup", "");
  bad.d = 0;
  run_json(bad, 2);
}

TEST_CASE("identical configs give identical output") {
  std::vector<RunConfig> runs{config("minors", "2x2x3"), config("gb-verify", "3x3"), config("hilbert", "2x3"),
                              config("segre-kernel", "2x3"), config("decompose", data("perturbed.json")),
                              config("blowup", "")};
  runs.back().n = 2;
  for (const auto& c : runs) {
    CAPTURE(c.command);
    CHECK(run_command(c).output == run_command(c).output);
    RunConfig text = c;
    text.json = false;
    CHECK(run_command(text).output == run_command(text).output);
  }
}

TEST_CASE("unknown command") {
  auto r = run_command(config("frobnicate", ""));
  CHECK(r.exit_code == 2);
}
