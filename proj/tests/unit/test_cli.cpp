#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "model_io.hpp"
#include "run.hpp"
#include "support.hpp"

using namespace htoric;
using namespace htoric::cli;
using nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(HTORIC_TEST_DATA_DIR) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(Command cmd, const std::string& input, unsigned degree = 4, Format format = Format::Json,
              std::uint64_t seed = 1, std::size_t samples = 100) {
  RunConfig c;
  c.command = cmd;
  c.input = input;
  c.degree = degree;
  c.format = format;
  c.seed = seed;
  c.samples = samples;
  std::ostringstream out, err;
  int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("htoric_cli_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("parse_model") {
  StackModel m = parse_model(json::parse(R"({"A": [[1,2]], "theta": [1], "kind": "hypertoric"})"));
  CHECK(m.kind == ModelKind::Hypertoric);
  CHECK(m.n() == 2);
  StackModel big = parse_model(json::parse(R"({"A": [["1", "123456789012345678901234567890"]], "theta": ["1"]})"));
  CHECK(big.base.matrix()(0, 1) == Integer("123456789012345678901234567890"));

  try {
    parse_model(json::parse(R"({"A": [[1,0,1],[0,1,1]], "theta": [1,0]})"));
    FAIL("expected NonGeneric");
  } catch (const NonGeneric& e) {
    CHECK(std::string(e.what()).find("basis {1,3}, lambda_3 = 0") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_model(json::parse(R"({"A": [[0,0]]})")), RankDeficient);
  CHECK_THROWS_AS(parse_model(json::parse(R"({"A": [[1,2],[3]]})")), DimensionMismatch);
  CHECK_THROWS_AS(parse_model(json::parse(R"({"A": [[1,2]]})")), InvalidInput);
  CHECK_THROWS_AS(parse_model(json::parse(R"({"A": [[1,2]], "theta": [1], "kind": "toric"})")), InvalidInput);
  CHECK_THROWS_AS(parse_model(json::parse(R"({"A": [[1,2]], "theta": ["x"]})")), InvalidInput);
  CHECK_THROWS_AS(parse_model(json::parse(R"({"kind": "direct", "A": [[1,2]], "unstable": [[3]]})")), InvalidInput);
  CHECK(parse_model(json::parse(R"({"kind": "direct", "A": [[1,2]], "unstable": [[1,2]]})")).num_coords() == 2);
}

TEST_CASE("local model files") {
  LocalModelSRE m = parse_local_model(json::parse(R"({"group_order": 2, "normal_weights": [-1, -1]})"));
  CHECK(m.generators.size() == 1);
  CHECK(m.normal_weights.size() == 2);
  LocalModelSRE g = parse_local_model(json::parse(R"({"generators": [["1/2", "1/3"]], "normal_weights": [[2, 3]]})"));
  CHECK(sre_condition_iii(g));
  CHECK_THROWS_AS(parse_local_model(json::parse(R"({"generators": [["1/2"]], "normal_weights": [[2, 3]]})")),
                  DimensionMismatch);
}

TEST_CASE("chowring subcommand") {
  Result r = invoke(Command::ChowRing, data("bmu3.json"), 3);
  CHECK(r.code == kSuccess);
  json j = json::parse(r.out);
  CHECK(j["relations"] == json::array({"3*t1"}));
  CHECK(j["graded"]["0"] == "Z");
  CHECK(j["graded"]["1"] == "Z/3");
  CHECK(j["graded"]["3"] == "Z/3");
  CHECK_FALSE(j["graded"].contains("4"));

  json p2 = json::parse(invoke(Command::ChowRing, data("p2.json"), 4).out);
  CHECK(p2["relations"] == json::array({"t1^3"}));
  CHECK(p2["graded"]["2"] == "Z");
  CHECK(p2["graded"]["3"] == "0");
}

TEST_CASE("inertia subcommand") {
  json j = json::parse(invoke(Command::Inertia, data("mu3.json")).out);
  REQUIRE(j.size() == 3);
  CHECK(j[1]["v"] == json::array({"1/3"}));
  CHECK(j[1]["order"] == 3);
  CHECK(j[1]["fixed"] == json::array({1, 4}));
  CHECK(j[1]["age"] == "1");
}

TEST_CASE("orbifold-table subcommand") {
  json j = json::parse(invoke(Command::OrbifoldTable, data("mu3.json")).out);
  CHECK(j["components"].size() == 3);
  bool found = false;
  for (const auto& p : j["products"])
    if (p["g1"] == json::array({"1/3"}) && p["g2"] == json::array({"2/3"})) {
      found = true;
      CHECK(p["target"] == json::array({"0"}));
      CHECK(p["poly"] == "2*t1^2");
    }
  CHECK(found);
}

TEST_CASE("verify subcommand") {
  Result r = invoke(Command::Verify, data("tp12.json"), 5, Format::Text);
  CHECK(r.code == kSuccess);
  CHECK(r.out.find("obstruction-pullback: pass; orbifold-iso: pass") != std::string::npos);
  json j = json::parse(invoke(Command::Verify, data("tp12.json"), 5).out);
  CHECK(j["pass"] == true);
  CHECK(j["checks"]["orbifold-iso"] == "pass");
  CHECK(invoke(Command::Verify, data("mu3.json"), 4).code == kSuccess);
  CHECK(invoke(Command::Verify, data("lawrence_tp12.json"), 4).code == kSuccess);
}

TEST_CASE("chart-check and sre-check subcommands") {
  Result c = invoke(Command::ChartCheck, data("tp12.json"), 4, Format::Json, 3, 100);
  CHECK(c.code == kSuccess);
  json j = json::parse(c.out);
  CHECK(j["pass"] == true);
  CHECK(j["charts"].size() == 2);
  CHECK(j["charts"][0]["roundtrips"] == 100);
  CHECK(invoke(Command::ChartCheck, data("mu3.json")).code == kInputError);

  CHECK(invoke(Command::SreCheck, data("tp12.json")).code == kSuccess);
  Result bad = invoke(Command::SreCheck, data("exstrong.json"));
  CHECK(bad.code == kVerificationFailure);
  CHECK(json::parse(bad.out)["models"][0]["condition_iii"] == false);
}

TEST_CASE("input errors exit with code 2 and a structured message") {
  Result ng = invoke(Command::Verify, data("nongeneric.json"));
  CHECK(ng.code == kInputError);
  json e = json::parse(ng.out);
  CHECK(e["error"]["kind"] == "non-generic");
  CHECK(e["error"]["message"].get<std::string>().find("basis {1,3}") != std::string::npos);

  Result rd = invoke(Command::Analyze, data("rankdef.json"));
  CHECK(rd.code == kInputError);
  CHECK(json::parse(rd.out)["error"]["message"].get<std::string>().find("rank deficient") != std::string::npos);

  Result missing = invoke(Command::Analyze, data("does_not_exist.json"));
  CHECK(missing.code == kInputError);
  CHECK(json::parse(missing.out)["error"]["kind"] == "invalid-input");

  Result malformed = invoke(Command::Analyze, write_temp("bad.json", "{\"A\": [[1,2]"));
  CHECK(malformed.code == kInputError);
  CHECK(json::parse(malformed.out)["error"]["message"].get<std::string>().find("malformed JSON") != std::string::npos);

  Result text = invoke(Command::Analyze, data("rankdef.json"), 4, Format::Text);
  CHECK(text.code == kInputError);
  CHECK(text.out.empty());
  CHECK(text.err.find("rank deficient") != std::string::npos);

  CHECK(invoke(Command::ChowRing, data("bmu3.json"), 0).code == kInputError);
  CHECK(invoke(Command::ChartCheck, data("tp12.json"), 4, Format::Json, 1, 0).code == kInputError);
}

TEST_CASE("identical input and seed give byte-identical output") {
  for (Command cmd : {Command::Analyze, Command::Inertia, Command::ChowRing, Command::OrbifoldTable, Command::Verify,
                      Command::ChartCheck, Command::SreCheck}) {
    Result a = invoke(cmd, data("tp12.json"), 4, Format::Json, 9, 30);
    Result b = invoke(cmd, data("tp12.json"), 4, Format::Json, 9, 30);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("command names") {
  for (const char* name : {"analyze", "inertia", "chowring", "orbifold-table", "verify", "chart-check", "sre-check"})
    CHECK(to_string(*parse_command(name)) == name);
  CHECK_FALSE(parse_command("bogus").has_value());
}
