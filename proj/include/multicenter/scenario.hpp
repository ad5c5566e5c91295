#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "multicenter/flows.hpp"

// Scenario files: a small JSON schema describing the environment, the
// generator count, the initial placement (explicit points or a seeded
// uniform sample), the flow to integrate, and the requested outputs.
//
//   {
//     "polygon": [[x, y], ...],
//     "n": 16,
//     "init": {"random_seed": 7}          // or {"points": [[x, y], ...]}
//     "flow": {"kind": "lloyd_circumcenter", "dt": 0.01,
//              "t_max": 20.0, "stop_tol": 0.0},
//     "outputs": {"csv": true, "svg_every_k_steps": 0}
//   }
namespace multicenter {

// Carries every schema violation found, each prefixed with its field path.
struct ScenarioError : std::runtime_error {
  explicit ScenarioError(std::vector<std::string> violations_in);
  std::vector<std::string> violations;
};

struct OutputSpec {
  bool csv = true;
  int svg_every_k_steps = 0;  // 0 disables periodic frames

  bool operator==(const OutputSpec&) const = default;
};

struct Scenario {
  ConvexPolygon polygon;
  int n = 0;
  std::variant<std::vector<Vec2>, std::uint64_t> init;  // points | random seed
  FlowSpec flow;
  OutputSpec outputs;
};

bool operator==(const Scenario& a, const Scenario& b);

// Parses and validates scenario text. Malformed fields, non-convex polygons
// and out-of-polygon initial points are reported as distinct violations.
Scenario parse_scenario(const std::string& text);

std::string serialize_scenario(const Scenario& scenario);

const char* flow_kind_name(FlowKind kind);

// Initial configuration: the explicit points, or rejection-sampled uniform
// points from the recorded seed.
Configuration initial_configuration(const Scenario& scenario);

}  // namespace multicenter
