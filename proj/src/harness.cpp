#include "multicenter/harness.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>

#include "multicenter/svg.hpp"

namespace multicenter {

namespace {

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::Converged:
      return "converged";
    case Termination::TimeLimit:
      return "t_max";
    case Termination::Error:
      return "error";
  }
  return "unknown";
}

nlohmann::json summary_json(const Scenario& scenario, const Trajectory& traj,
                            const ConvexPolygon& environment) {
  nlohmann::json summary;
  summary["flow"] = flow_kind_name(traj.kind);
  summary["terminated_by"] = termination_name(traj.terminated_by);
  if (!traj.error.empty()) summary["error"] = traj.error;
  if (std::holds_alternative<std::uint64_t>(scenario.init))
    summary["random_seed"] = std::get<std::uint64_t>(scenario.init);
  summary["steps"] = traj.samples.empty() ? 0 : traj.samples.size() - 1;
  if (traj.samples.empty()) return summary;

  const TrajectorySample& last = traj.samples.back();
  summary["t_final"] = last.t;
  summary["H_DC"] = last.covering_value;
  summary["H_SP"] = last.packing_value;

  const Problem problem = flow_problem(traj.kind);
  const DiagnosticsReport report = diagnose(traj, environment, problem);
  summary["least_norm"] = report.final_least_norm;
  summary["critical"] = report.final_critical;
  summary["monotonicity_violation_fraction"] = report.violation_fraction;
  summary["chattering_rate"] = report.chattering_rate;
  nlohmann::json centered = nlohmann::json::array();
  for (const GeneratorCenteredness& g : report.final_centeredness)
    centered.push_back({{"generator", g.generator}, {"center_distance", g.center_distance}});
  summary["active_centeredness"] = std::move(centered);
  return summary;
}

}  // namespace

std::string trajectory_csv(const Trajectory& trajectory) {
  std::string out = "t,i,x,y,H_DC,H_SP,speed\n";
  for (const TrajectorySample& sample : trajectory.samples) {
    for (int i = 0; i < sample.sites.size(); ++i) {
      const Vec2& p = sample.sites.points[static_cast<std::size_t>(i)];
      out += fmt12(sample.t);
      out += ',';
      out += std::to_string(i);
      out += ',';
      out += fmt12(p.x());
      out += ',';
      out += fmt12(p.y());
      out += ',';
      out += fmt12(sample.covering_value);
      out += ',';
      out += fmt12(sample.packing_value);
      out += ',';
      out += fmt12(sample.speeds[static_cast<std::size_t>(i)]);
      out += '\n';
    }
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

RunArtifacts run_scenario(const Scenario& scenario, const std::filesystem::path& out_dir,
                          bool force_svg) {
  std::filesystem::create_directories(out_dir);
  const Configuration initial = initial_configuration(scenario);
  RunArtifacts artifacts;
  artifacts.trajectory = integrate(scenario.flow, scenario.polygon, initial);
  const Trajectory& traj = artifacts.trajectory;

  if (scenario.outputs.csv && !traj.samples.empty()) {
    artifacts.csv_path = out_dir / "trajectory.csv";
    write_file_atomic(artifacts.csv_path, trajectory_csv(traj));
  }

  const bool want_svg = force_svg || scenario.outputs.svg_every_k_steps > 0;
  if (want_svg && !traj.samples.empty()) {
    SvgOptions options;
    auto frame_at = [&](std::size_t sample_index) {
      return render_partition_svg(
          compute_partition(scenario.polygon, traj.samples[sample_index].sites), options);
    };
    auto emit = [&](const std::string& name, const std::string& content) {
      const std::filesystem::path p = out_dir / name;
      write_file_atomic(p, content);
      artifacts.svg_paths.push_back(p);
    };
    emit("initial.svg", frame_at(0));
    emit("final.svg", frame_at(traj.samples.size() - 1));
    emit("overlay.svg", render_trajectory_svg(scenario.polygon, traj, options));
    const int k = scenario.outputs.svg_every_k_steps;
    if (k > 0) {
      for (std::size_t s = k; s + 1 < traj.samples.size(); s += static_cast<std::size_t>(k)) {
        char name[48];
        std::snprintf(name, sizeof name, "step_%06zu.svg", s);
        emit(name, frame_at(s));
      }
    }
  }

  artifacts.summary_path = out_dir / "summary.json";
  write_file_atomic(artifacts.summary_path,
                    summary_json(scenario, traj, scenario.polygon).dump(2) + "\n");
  return artifacts;
}

}  // namespace multicenter
