#include "multicenter/scenario.hpp"

#include <json.hpp>

#include <sstream>

#include "multicenter/rng.hpp"

namespace multicenter {

namespace {

using nlohmann::json;

std::string join_violations(const std::vector<std::string>& violations) {
  std::ostringstream out;
  out << "invalid scenario:";
  for (const std::string& v : violations) out << "\n  " << v;
  return out.str();
}

const std::pair<FlowKind, const char*> kFlowNames[] = {
    {FlowKind::GradientCovering, "gradient_covering"},
    {FlowKind::GradientPacking, "gradient_packing"},
    {FlowKind::DistributedGradientCovering, "distributed_gradient_covering"},
    {FlowKind::DistributedGradientPacking, "distributed_gradient_packing"},
    {FlowKind::LloydCircumcenter, "lloyd_circumcenter"},
    {FlowKind::LloydIncenter, "lloyd_incenter"},
};

std::vector<Vec2> parse_point_list(const json& node, const std::string& field,
                                   std::vector<std::string>& violations) {
  std::vector<Vec2> points;
  if (!node.is_array()) {
    violations.push_back(field + ": expected a list of [x, y] pairs");
    return points;
  }
  for (std::size_t k = 0; k < node.size(); ++k) {
    const json& entry = node[k];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      violations.push_back(field + "[" + std::to_string(k) + "]: expected [x, y]");
      continue;
    }
    points.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return points;
}

}  // namespace

ScenarioError::ScenarioError(std::vector<std::string> violations_in)
    : std::runtime_error(join_violations(violations_in)), violations(std::move(violations_in)) {}

const char* flow_kind_name(FlowKind kind) {
  for (const auto& [k, name] : kFlowNames)
    if (k == kind) return name;
  return "unknown";
}

bool operator==(const Scenario& a, const Scenario& b) {
  return a.polygon == b.polygon && a.n == b.n && a.init == b.init &&
         a.flow.kind == b.flow.kind && a.flow.dt == b.flow.dt && a.flow.t_max == b.flow.t_max &&
         a.flow.stop_tol == b.flow.stop_tol && a.outputs == b.outputs;
}

Scenario parse_scenario(const std::string& text) {
  std::vector<std::string> violations;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ScenarioError({std::string("syntax: ") + err.what()});
  }
  if (!root.is_object()) throw ScenarioError({"top level: expected an object"});

  Scenario scenario;

  // polygon
  bool polygon_ok = false;
  if (!root.contains("polygon")) {
    violations.push_back("polygon: missing");
  } else {
    const std::vector<Vec2> vs = parse_point_list(root["polygon"], "polygon", violations);
    if (violations.empty()) {
      try {
        scenario.polygon = ConvexPolygon::from_vertices(
            vs, vs.size() >= 2 ? 1e-9 * (vs.front() - vs.back()).norm() + 1e-12 : 1e-12);
        polygon_ok = true;
      } catch (const GeometryError& err) {
        violations.push_back(std::string("polygon: ") + err.what());
      }
    }
  }

  // n
  if (!root.contains("n") || !root["n"].is_number_integer() || root["n"].get<int>() < 1) {
    violations.push_back("n: expected a positive integer");
  } else {
    scenario.n = root["n"].get<int>();
  }

  // init
  if (!root.contains("init") || !root["init"].is_object()) {
    violations.push_back("init: expected an object with points or random_seed");
  } else {
    const json& init = root["init"];
    const bool has_points = init.contains("points");
    const bool has_seed = init.contains("random_seed");
    if (has_points == has_seed) {
      violations.push_back("init: exactly one of points or random_seed is required");
    } else if (has_seed) {
      if (!init["random_seed"].is_number_unsigned() && !init["random_seed"].is_number_integer()) {
        violations.push_back("init.random_seed: expected an integer");
      } else {
        scenario.init = init["random_seed"].get<std::uint64_t>();
      }
    } else {
      std::vector<Vec2> points = parse_point_list(init["points"], "init.points", violations);
      if (scenario.n > 0 && static_cast<int>(points.size()) != scenario.n)
        violations.push_back("init.points: expected exactly n points");
      if (polygon_ok) {
        const double eps = geometry_tolerance(scenario.polygon);
        for (std::size_t k = 0; k < points.size(); ++k) {
          if (!scenario.polygon.contains(points[k], eps))
            violations.push_back("init.points[" + std::to_string(k) +
                                 "]: point outside the polygon");
        }
      }
      scenario.init = std::move(points);
    }
  }

  // flow
  if (!root.contains("flow") || !root["flow"].is_object()) {
    violations.push_back("flow: expected an object");
  } else {
    const json& flow = root["flow"];
    if (!flow.contains("kind") || !flow["kind"].is_string()) {
      violations.push_back("flow.kind: expected a string");
    } else {
      const std::string name = flow["kind"].get<std::string>();
      bool found = false;
      for (const auto& [kind, kind_name] : kFlowNames) {
        if (name == kind_name) {
          scenario.flow.kind = kind;
          found = true;
        }
      }
      if (!found) violations.push_back("flow.kind: unknown kind '" + name + "'");
    }
    auto read_positive = [&](const char* key, double& out, bool allow_zero) {
      if (!flow.contains(key)) return;  // keep the default
      if (!flow[key].is_number()) {
        violations.push_back(std::string("flow.") + key + ": expected a number");
        return;
      }
      const double value = flow[key].get<double>();
      if (value < 0.0 || (!allow_zero && value == 0.0)) {
        violations.push_back(std::string("flow.") + key + ": must be positive");
        return;
      }
      out = value;
    };
    read_positive("dt", scenario.flow.dt, false);
    read_positive("t_max", scenario.flow.t_max, false);
    read_positive("stop_tol", scenario.flow.stop_tol, true);
    if (scenario.flow.t_max < scenario.flow.dt)
      violations.push_back("flow.t_max: must be at least dt");
  }

  // outputs
  if (root.contains("outputs")) {
    if (!root["outputs"].is_object()) {
      violations.push_back("outputs: expected an object");
    } else {
      const json& outputs = root["outputs"];
      if (outputs.contains("csv")) {
        if (!outputs["csv"].is_boolean())
          violations.push_back("outputs.csv: expected a boolean");
        else
          scenario.outputs.csv = outputs["csv"].get<bool>();
      }
      if (outputs.contains("svg_every_k_steps")) {
        if (!outputs["svg_every_k_steps"].is_number_integer() ||
            outputs["svg_every_k_steps"].get<int>() < 0)
          violations.push_back("outputs.svg_every_k_steps: expected a non-negative integer");
        else
          scenario.outputs.svg_every_k_steps = outputs["svg_every_k_steps"].get<int>();
      }
    }
  }

  if (!violations.empty()) throw ScenarioError(std::move(violations));
  return scenario;
}

std::string serialize_scenario(const Scenario& scenario) {
  json root;
  json polygon = json::array();
  for (const Vec2& v : scenario.polygon.vertices()) polygon.push_back({v.x(), v.y()});
  root["polygon"] = std::move(polygon);
  root["n"] = scenario.n;
  if (std::holds_alternative<std::uint64_t>(scenario.init)) {
    root["init"] = {{"random_seed", std::get<std::uint64_t>(scenario.init)}};
  } else {
    json points = json::array();
    for (const Vec2& p : std::get<std::vector<Vec2>>(scenario.init))
      points.push_back({p.x(), p.y()});
    root["init"] = {{"points", std::move(points)}};
  }
  root["flow"] = {{"kind", flow_kind_name(scenario.flow.kind)},
                  {"dt", scenario.flow.dt},
                  {"t_max", scenario.flow.t_max},
                  {"stop_tol", scenario.flow.stop_tol}};
  root["outputs"] = {{"csv", scenario.outputs.csv},
                     {"svg_every_k_steps", scenario.outputs.svg_every_k_steps}};
  return root.dump(2) + "\n";
}

Configuration initial_configuration(const Scenario& scenario) {
  Configuration config;
  if (std::holds_alternative<std::vector<Vec2>>(scenario.init)) {
    config.points = std::get<std::vector<Vec2>>(scenario.init);
    return config;
  }
  Xoshiro256 rng(std::get<std::uint64_t>(scenario.init));
  config.points.reserve(static_cast<std::size_t>(scenario.n));
  for (int i = 0; i < scenario.n; ++i)
    config.points.push_back(sample_point_in_polygon(rng, scenario.polygon));
  return config;
}

}  // namespace multicenter
