#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "tetra/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input) {
  args.insert(args.begin(), "tetra_cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = tetra::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kWorked =
    R"({"n": 1, "E1": [[1.4142135623730951, 0], [-0.7071067811865476, 0]],
        "E2": [[-0.7071067811865476, 0], [1.4142135623730951, 0]], "D": [[-2, 0], [0.5, 0]]})";

const std::string kWorkedSpec = R"({"alpha1": [], "alpha2": [[0.5, 0]], "sigma": [[0, 0]],
                                 "t_plus": 1.75, "t": [1.4142135623730951, 0], "omega": [1, 0]})";

}  // namespace

TEST_CASE("classify") {
  Run r = run({"classify"}, "[[0,0],[0,0],[0,0]]");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["region"] == "Interior");
  r = run({"classify"}, R"({"x1": [0, 1], "x2": 1, "x3": [0, 1]})");
  CHECK(json::parse(r.out)["region"] == "DistinguishedBoundary");
  r = run({"classify"}, R"([[-0.5, 0.5], [0.5, 0.5], [0, 0]])");
  CHECK(json::parse(r.out)["region"] == "Outside");
  r = run({"classify"}, R"({"s": 2, "p": 1})");
  CHECK(json::parse(r.out)["kind"] == "gamma");
  CHECK(json::parse(r.out)["region"] == "GammaDistinguished");

  CHECK(run({"classify"}, "{not json").code == 2);
  CHECK(run({"classify"}, "[1]").code == 2);
  CHECK(run({"classify"}, R"({"x1": "a"})").code == 2);
  CHECK(run({"--samples", "3", "classify"}, "[0,0,0]").code == 2);
  CHECK(run({"--strict", "--lenient", "classify"}, "[0,0,0]").code == 2);
  CHECK(run({"classify", "/nonexistent/file.json"}, "").code == 2);
}

TEST_CASE("construct") {
  Run r = run({"construct"}, kWorkedSpec);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["n"] == 1);
  CHECK(std::abs(std::abs(j["D"][0][0].get<double>()) - 2.0) < 1e-9);
  CHECK(std::abs(std::abs(j["D"][1][0].get<double>()) - 0.5) < 1e-9);
  CHECK(j["analysis"]["degree"] == 1);
  CHECK(j["analysis"]["type"] == json::array({1, 0}));
  REQUIRE(j["analysis"]["royal_nodes"].size() == 1);

  r = run({"construct"}, R"({"alpha1": [], "alpha2": [], "sigma": [], "t_plus": 1, "t": [1, 0], "omega": [1, 0]})");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["n"] == 0);

  r = run({"construct"}, R"({"alpha1": [[1, 0]], "alpha2": [], "sigma": [[1, 0]], "t_plus": 1, "t": [1, 0], "omega": [1, 0]})");
  CHECK(r.code == 3);
  CHECK(r.err.find("NodeZeroCollision") != std::string::npos);
  CHECK(run({"construct"}, R"({"alpha1": [], "sigma": [[2, 0]]})").code != 0);
}

TEST_CASE("verify") {
  Run r = run({"verify"}, kWorked);
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["conditions"].size() == 7);
  CHECK(j["invariants"].size() >= 5);
  for (const auto& c : j["invariants"]) CHECK(c["passed"] == true);

  r = run({"verify"}, R"({"n": 1, "E1": [[2, 0]], "E2": [[2, 0]], "D": [[1, 0]]})");
  CHECK(r.code == 3);
  CHECK(json::parse(r.out)["valid"] == false);

  // circle zero of D passes only leniently
  const std::string lenient = R"({"n": 1, "E1": [], "E2": [], "D": [[1, 0], [1, 0]]})";
  CHECK(run({"verify"}, lenient).code == 3);
  CHECK(run({"--lenient", "verify"}, lenient).code == 0);
}

TEST_CASE("analyze") {
  Run r = run({"analyze"}, R"({"n": 1, "E1": [[1, 0]], "E2": [[0, 0], [1, 0]], "D": [[1, 0]]})");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["type"] == "royal-variety");
  r = run({"analyze"}, kWorked);
  CHECK(json::parse(r.out)["degree"] == 1);
  CHECK(run({"analyze"}, R"({"n": 1, "E1": [[2, 0]], "E2": [[2, 0]], "D": [[1, 0]]})").code == 3);
}

TEST_CASE("trace") {
  Run r = run({"trace"}, kWorked);
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("theta,", 0) == 0);
  int rows = 0;
  double worst = 0.0;
  while (std::getline(lines, line)) {
    ++rows;
    worst = std::max(worst, std::stod(line.substr(line.rfind(',') + 1)));
  }
  CHECK(rows == 256);
  CHECK(worst < 1e-10);

  r = run({"--format", "json", "--samples", "32", "trace"}, kWorked);
  CHECK(json::parse(r.out).size() == 32);
}

TEST_CASE("perturb") {
  Run r = run({"perturb"}, kWorked);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["method"] == "EpsilonScaling");
  CHECK(j["midpoint_max_coeff_error"].get<double>() < 1e-15);
  CHECK(j.contains("x_plus"));
  CHECK(j.contains("x_minus"));
}

TEST_CASE("output is deterministic") {
  for (const auto& cmd : {"verify", "analyze", "trace", "perturb"}) {
    const Run a = run({"--seed", "9", cmd}, kWorked), b = run({"--seed", "9", cmd}, kWorked);
    CHECK(a.out == b.out);
  }
  CHECK(run({"construct"}, kWorkedSpec).out == run({"construct"}, kWorkedSpec).out);
}
