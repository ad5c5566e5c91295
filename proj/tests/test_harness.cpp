#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "multicenter/harness.hpp"
#include "oracles.hpp"

using namespace multicenter;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::filesystem::path scenario_dir() { return MULTICENTER_SCENARIO_DIR; }

// Minimal XML well-formedness scan: angle-bracket balance and tag nesting.
bool xml_well_formed(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  if (text.rfind("<?xml", 0) != 0) return false;
  while ((pos = text.find('<', pos)) != std::string::npos) {
    const std::size_t end = text.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = text.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    const bool closing = tag[0] == '/';
    const bool self_closing = tag.back() == '/';
    std::string name = tag.substr(closing ? 1 : 0);
    name = name.substr(0, name.find_first_of(" \t\n/"));
    if (closing) {
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else if (!self_closing) {
      stack.push_back(name);
    }
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("scenario parsing") {
  SUBCASE("bundled octagon scenario") {
    const Scenario s =
        parse_scenario(slurp(scenario_dir() / "octagon16_lloyd_circumcenter.json"));
    CHECK(s.polygon.size() == 8);
    CHECK(s.n == 16);
    CHECK(std::holds_alternative<std::uint64_t>(s.init));
    CHECK(s.flow.kind == FlowKind::LloydCircumcenter);
    CHECK(s.flow.dt == 0.01);
    CHECK(s.flow.t_max == 20.0);
    // the full vertex list survives canonicalization
    const ConvexPolygon expected = oracles::octagon_environment();
    for (int k = 0; k < 8; ++k)
      CHECK((s.polygon.vertex(k) - expected.vertex(k)).norm() < 1e-12);
  }
  SUBCASE("out-of-polygon initial point is a named violation") {
    const std::string text = R"({
      "polygon": [[0,0],[1,0],[1,1],[0,1]],
      "n": 1,
      "init": {"points": [[10, 10]]},
      "flow": {"kind": "lloyd_circumcenter"}
    })";
    try {
      parse_scenario(text);
      FAIL("expected a scenario error");
    } catch (const ScenarioError& err) {
      REQUIRE(err.violations.size() == 1);
      CHECK(err.violations[0].find("init.points[0]") != std::string::npos);
      CHECK(err.violations[0].find("outside") != std::string::npos);
    }
  }
  SUBCASE("two-vertex polygon is a named violation") {
    const std::string text = R"({
      "polygon": [[0,0],[1,0]],
      "n": 1,
      "init": {"random_seed": 1},
      "flow": {"kind": "lloyd_circumcenter"}
    })";
    try {
      parse_scenario(text);
      FAIL("expected a scenario error");
    } catch (const ScenarioError& err) {
      REQUIRE(!err.violations.empty());
      CHECK(err.violations[0].find("polygon") != std::string::npos);
    }
  }
  SUBCASE("malformed fields are reported with their paths") {
    const std::string text = R"({
      "polygon": [[0,0],[1,0],[1,1],[0,1]],
      "n": -3,
      "init": {"random_seed": 1, "points": [[0.5, 0.5]]},
      "flow": {"kind": "warp_drive", "dt": -1}
    })";
    try {
      parse_scenario(text);
      FAIL("expected a scenario error");
    } catch (const ScenarioError& err) {
      std::string joined;
      for (const std::string& v : err.violations) joined += v + "\n";
      CHECK(joined.find("n:") != std::string::npos);
      CHECK(joined.find("init:") != std::string::npos);
      CHECK(joined.find("flow.kind") != std::string::npos);
      CHECK(joined.find("flow.dt") != std::string::npos);
    }
  }
  SUBCASE("syntax errors carry the parser position") {
    try {
      parse_scenario("{\"polygon\": [[0,0],");
      FAIL("expected a scenario error");
    } catch (const ScenarioError& err) {
      REQUIRE(!err.violations.empty());
      CHECK(err.violations[0].find("syntax") != std::string::npos);
    }
  }
}

TEST_CASE("scenario round-trip") {
  for (const char* name : {"octagon16_lloyd_circumcenter.json", "square2_demo.json"}) {
    const Scenario original = parse_scenario(slurp(scenario_dir() / name));
    const Scenario reparsed = parse_scenario(serialize_scenario(original));
    CHECK(original == reparsed);
  }
}

TEST_CASE("seeded initial configurations are reproducible and inside") {
  const Scenario s = parse_scenario(slurp(scenario_dir() / "octagon16_lloyd_circumcenter.json"));
  const Configuration a = initial_configuration(s);
  const Configuration b = initial_configuration(s);
  REQUIRE(a.size() == 16);
  for (int i = 0; i < 16; ++i) {
    CHECK(a.points[static_cast<std::size_t>(i)] == b.points[static_cast<std::size_t>(i)]);
    CHECK(s.polygon.contains(a.points[static_cast<std::size_t>(i)], 0.0));
  }
}

TEST_CASE("running a scenario writes the requested artifacts") {
  const std::filesystem::path out = std::filesystem::temp_directory_path() / "mc_harness_test";
  std::filesystem::remove_all(out);
  Scenario s = parse_scenario(slurp(scenario_dir() / "square2_demo.json"));
  const RunArtifacts artifacts = run_scenario(s, out, true);

  CHECK(std::filesystem::exists(artifacts.summary_path));
  REQUIRE(std::filesystem::exists(artifacts.csv_path));
  REQUIRE(artifacts.svg_paths.size() >= 3);

  SUBCASE("csv columns and row count") {
    const std::string csv = slurp(artifacts.csv_path);
    CHECK(csv.rfind("t,i,x,y,H_DC,H_SP,speed\n", 0) == 0);
    const std::size_t rows = static_cast<std::size_t>(
        std::count(csv.begin(), csv.end(), '\n'));
    CHECK(rows == artifacts.trajectory.samples.size() * 2 + 1);
  }
  SUBCASE("golden determinism: repeated runs are byte-identical") {
    const std::string first = slurp(artifacts.csv_path);
    const std::filesystem::path out2 =
        std::filesystem::temp_directory_path() / "mc_harness_test2";
    std::filesystem::remove_all(out2);
    const RunArtifacts again = run_scenario(s, out2, false);
    CHECK(first == slurp(again.csv_path));
  }
  SUBCASE("svg frames are well formed and carry the cells") {
    for (const auto& path : artifacts.svg_paths) {
      const std::string svg = slurp(path);
      CHECK(xml_well_formed(svg));
    }
    const std::string final_frame = slurp(out / "final.svg");
    // two cells plus the environment outline
    std::size_t polygons = 0, from = 0;
    while ((from = final_frame.find("<polygon", from)) != std::string::npos) {
      ++polygons;
      from += 8;
    }
    CHECK(polygons == 3);
  }
  SUBCASE("summary carries the final state") {
    const std::string summary = slurp(artifacts.summary_path);
    CHECK(summary.find("\"H_DC\"") != std::string::npos);
    CHECK(summary.find("\"H_SP\"") != std::string::npos);
    CHECK(summary.find("\"least_norm\"") != std::string::npos);
    CHECK(summary.find("\"active_centeredness\"") != std::string::npos);
  }
}

TEST_CASE("a one-generator covering-descent scenario lands on the circumcenter") {
  // square environment: its enclosing circle rests on all four corners, so
  // the descent has a full-rank terminal gradient and parks at the center
  Scenario s;
  s.polygon = ConvexPolygon::from_vertices(
      {Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)}, 1e-12);
  s.n = 1;
  s.init = std::vector<Vec2>{Vec2(0.12, 0.77)};
  s.flow.kind = FlowKind::DistributedGradientCovering;
  s.flow.dt = 2e-4;
  s.flow.t_max = 4.0;
  s.flow.stop_tol = 0.0;
  s.outputs.csv = false;
  const std::filesystem::path out = std::filesystem::temp_directory_path() / "mc_harness_cc";
  std::filesystem::remove_all(out);
  const RunArtifacts artifacts = run_scenario(s, out, false);
  CHECK(artifacts.csv_path.empty());  // csv disabled: summary only
  CHECK(std::filesystem::exists(artifacts.summary_path));
  const Vec2 target = circumcenter(s.polygon).center;
  double closest = std::numeric_limits<double>::infinity();
  for (const TrajectorySample& sample : artifacts.trajectory.samples)
    closest = std::min(closest, (sample.sites.points[0] - target).norm());
  CHECK(closest < 1e-3);
}
