#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "multicenter/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitScenarioError = 1;
constexpr int kExitFlowError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw multicenter::ScenarioError({"file: cannot open " + path});
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

multicenter::Scenario load_scenario(const std::string& path) {
  return multicenter::parse_scenario(read_file(path));
}

int cmd_run(const std::string& scenario_path, const std::string& out_dir, bool svg) {
  const multicenter::Scenario scenario = load_scenario(scenario_path);
  const multicenter::RunArtifacts artifacts =
      multicenter::run_scenario(scenario, out_dir, svg);
  std::cout << "wrote " << artifacts.summary_path.string() << "\n";
  if (!artifacts.csv_path.empty()) std::cout << "wrote " << artifacts.csv_path.string() << "\n";
  for (const auto& p : artifacts.svg_paths) std::cout << "wrote " << p.string() << "\n";
  if (artifacts.trajectory.terminated_by == multicenter::Termination::Error) {
    std::cerr << "flow error: " << artifacts.trajectory.error << "\n";
    return kExitFlowError;
  }
  return kExitOk;
}

int cmd_eval(const std::string& scenario_path) {
  const multicenter::Scenario scenario = load_scenario(scenario_path);
  const multicenter::Configuration config = multicenter::initial_configuration(scenario);
  const auto covering =
      multicenter::classify_critical(scenario.polygon, config, multicenter::Problem::Covering);
  const auto packing =
      multicenter::classify_critical(scenario.polygon, config, multicenter::Problem::Packing);
  std::cout << "H_DC " << covering.objective_value << " least_norm "
            << covering.report.least_norm_magnitude << " critical "
            << (covering.critical ? "yes" : "no") << "\n";
  std::cout << "H_SP " << packing.objective_value << " least_norm "
            << packing.report.least_norm_magnitude << " critical "
            << (packing.critical ? "yes" : "no") << "\n";
  for (const auto& g : covering.active_generators)
    std::cout << "covering active generator " << g.generator << " center_distance "
              << g.center_distance << "\n";
  for (const auto& g : packing.active_generators)
    std::cout << "packing active generator " << g.generator << " center_distance "
              << g.center_distance << "\n";
  return kExitOk;
}

int cmd_oracle(const std::string& scenario_path, int grid) {
  const multicenter::Scenario scenario = load_scenario(scenario_path);
  const multicenter::Configuration config = multicenter::initial_configuration(scenario);
  const multicenter::ConvexPolygon& poly = scenario.polygon;

  // Covering objective by grid search: worst distance to the nearest site.
  double xmin = poly.vertex(0).x(), xmax = xmin, ymin = poly.vertex(0).y(), ymax = ymin;
  for (const auto& v : poly.vertices()) {
    xmin = std::min(xmin, v.x());
    xmax = std::max(xmax, v.x());
    ymin = std::min(ymin, v.y());
    ymax = std::max(ymax, v.y());
  }
  double covering = 0.0;
  for (int a = 0; a <= grid; ++a) {
    for (int b = 0; b <= grid; ++b) {
      const multicenter::Vec2 q(xmin + (xmax - xmin) * a / grid,
                                ymin + (ymax - ymin) * b / grid);
      if (!poly.contains(q, 0.0)) continue;
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& p : config.points) nearest = std::min(nearest, (q - p).norm());
      covering = std::max(covering, nearest);
    }
  }

  // Packing objective directly: half pairwise distances and wall distances.
  double packing = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < config.points.size(); ++i) {
    for (std::size_t j = i + 1; j < config.points.size(); ++j)
      packing = std::min(packing, 0.5 * (config.points[i] - config.points[j]).norm());
    for (int e = 0; e < poly.edge_count(); ++e)
      packing = std::min(packing,
                         multicenter::distance_to_segment(config.points[i], poly.edge(e)));
  }

  std::cout << "H_DC_grid " << covering << "\n";
  std::cout << "H_SP_exact " << packing << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disk-covering and sphere-packing coverage flows"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir = "out";
  bool svg = false;
  int grid = 300;

  CLI::App* run = app.add_subcommand("run", "Integrate a scenario and write artifacts");
  run->add_option("--scenario", scenario_path, "Scenario file")->required();
  run->add_option("--out", out_dir, "Output directory");
  run->add_flag("--svg", svg, "Write SVG frames");

  CLI::App* eval = app.add_subcommand("eval", "Objectives and criticality, no integration");
  eval->add_option("--scenario", scenario_path, "Scenario file")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force objective values");
  oracle->add_option("--scenario", scenario_path, "Scenario file")->required();
  oracle->add_option("--grid", grid, "Grid resolution per axis");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(scenario_path, out_dir, svg);
    if (eval->parsed()) return cmd_eval(scenario_path);
    if (oracle->parsed()) return cmd_oracle(scenario_path, grid);
  } catch (const multicenter::ScenarioError& err) {
    std::cerr << err.what() << "\n";
    return kExitScenarioError;
  } catch (const multicenter::GeometryError& err) {
    std::cerr << "flow error: " << err.what() << "\n";
    return kExitFlowError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFlowError;
  }
  return kExitOk;
}
