#include "multicenter/flows.hpp"

#include <algorithm>
#include <cmath>

namespace multicenter {

namespace {

std::vector<Vec2> project_least_norm(const GradientSet& grad, int n, double sign) {
  const Eigen::VectorXd x = least_norm_point([&grad] {
    std::vector<Eigen::VectorXd> pts;
    pts.reserve(grad.candidates.size());
    for (const GradientCandidate& c : grad.candidates) pts.push_back(c.vector);
    return pts;
  }());
  std::vector<Vec2> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = sign * x.segment<2>(2 * i);
  return v;
}

}  // namespace

Problem flow_problem(FlowKind kind) {
  switch (kind) {
    case FlowKind::GradientCovering:
    case FlowKind::DistributedGradientCovering:
    case FlowKind::LloydCircumcenter:
      return Problem::Covering;
    default:
      return Problem::Packing;
  }
}

bool flow_increases_objective(FlowKind kind) { return flow_problem(kind) == Problem::Packing; }

std::vector<Vec2> flow_velocity(FlowKind kind, const ConvexPolygon& environment,
                                const Configuration& sites, double tie_tol) {
  const VoronoiPartition partition = compute_partition(environment, sites);
  const int n = sites.size();
  const double tol = tie_tol < 0.0 ? active_tolerance(environment) : tie_tol;
  std::vector<Vec2> v(static_cast<std::size_t>(n), Vec2::Zero());
  switch (kind) {
    case FlowKind::GradientCovering:
      return project_least_norm(covering_gradient(partition, tol), n, -1.0);
    case FlowKind::GradientPacking:
      return project_least_norm(packing_gradient(partition, tol), n, +1.0);
    default:
      break;
  }
  for (int i = 0; i < n; ++i) {
    const ConvexPolygon& cell = partition.cells[static_cast<std::size_t>(i)];
    const Vec2& p = sites.points[static_cast<std::size_t>(i)];
    switch (kind) {
      case FlowKind::DistributedGradientCovering: {
        const GradientSet g = farthest_vertex_gradient(cell, p, tol);
        const CriticalityReport r = least_norm(g);
        v[static_cast<std::size_t>(i)] = -Vec2(r.least_norm_vector(0), r.least_norm_vector(1));
        break;
      }
      case FlowKind::DistributedGradientPacking: {
        const GradientSet g = clearance_gradient(cell, p, tol);
        const CriticalityReport r = least_norm(g);
        v[static_cast<std::size_t>(i)] = Vec2(r.least_norm_vector(0), r.least_norm_vector(1));
        break;
      }
      case FlowKind::LloydCircumcenter:
        v[static_cast<std::size_t>(i)] = circumcenter(cell).center - p;
        break;
      case FlowKind::LloydIncenter:
        v[static_cast<std::size_t>(i)] =
            project_onto_segment(p, incenter_set(cell).segment) - p;
        break;
      default:
        break;  // centralized kinds handled above
    }
  }
  return v;
}

Trajectory integrate(const FlowSpec& spec, const ConvexPolygon& environment,
                     const Configuration& initial) {
  if (spec.dt <= 0.0 || spec.t_max < spec.dt || spec.stop_tol < 0.0)
    throw GeometryError("invalid flow specification");
  Trajectory traj;
  traj.kind = spec.kind;
  traj.dt = spec.dt;

  Configuration current = initial;
  const int n = current.size();
  const int total_steps = static_cast<int>(std::llround(spec.t_max / spec.dt));
  // ties reachable within a step belong to the assembled gradient: with
  // unit-bounded fields one step moves levels by at most ~2 dt
  const double tie_tol = std::max(active_tolerance(environment), 2.0 * spec.dt);

  auto record = [&](int step, const std::vector<Vec2>& velocity) {
    TrajectorySample sample;
    sample.t = step * spec.dt;
    sample.sites = current;
    const VoronoiPartition part = compute_partition(environment, current);
    sample.covering_value = covering_objective(part).value;
    sample.packing_value = packing_objective(part).value;
    sample.speeds.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      sample.speeds[static_cast<std::size_t>(i)] = velocity[static_cast<std::size_t>(i)].norm();
    traj.samples.push_back(std::move(sample));
  };

  try {
    std::vector<Vec2> velocity = flow_velocity(spec.kind, environment, current, tie_tol);
    record(0, velocity);
    for (int step = 1; step <= total_steps; ++step) {
      for (int i = 0; i < n; ++i) {
        Vec2 next = current.points[static_cast<std::size_t>(i)] +
                    spec.dt * velocity[static_cast<std::size_t>(i)];
        const Vec2 clamped = environment.project(next);
        traj.max_boundary_violation =
            std::max(traj.max_boundary_violation, (next - clamped).norm());
        current.points[static_cast<std::size_t>(i)] = clamped;
      }
      velocity = flow_velocity(spec.kind, environment, current, tie_tol);
      record(step, velocity);

      if (spec.stop_tol > 0.0 && step >= 10) {
        const Configuration& past =
            traj.samples[static_cast<std::size_t>(step - 10)].sites;
        double max_disp = 0.0;
        for (int i = 0; i < n; ++i)
          max_disp = std::max(max_disp, (current.points[static_cast<std::size_t>(i)] -
                                         past.points[static_cast<std::size_t>(i)])
                                            .norm());
        if (max_disp < spec.stop_tol * spec.dt * 10.0) {
          traj.terminated_by = Termination::Converged;
          return traj;
        }
      }
    }
    traj.terminated_by = Termination::TimeLimit;
  } catch (const GeometryError& err) {
    traj.terminated_by = Termination::Error;
    traj.error = err.what();
  }
  return traj;
}

DiagnosticsReport diagnose(const Trajectory& trajectory, const ConvexPolygon& environment,
                           Problem problem) {
  DiagnosticsReport report;
  if (trajectory.samples.empty()) return report;
  const double dt = trajectory.dt;
  report.step_tolerance = 10.0 * dt * dt + active_tolerance(environment);
  const bool increasing = problem == Problem::Packing;

  const std::size_t steps = trajectory.samples.size() - 1;
  for (std::size_t s = 1; s < trajectory.samples.size(); ++s) {
    const double before = problem == Problem::Covering
                              ? trajectory.samples[s - 1].covering_value
                              : trajectory.samples[s - 1].packing_value;
    const double after = problem == Problem::Covering ? trajectory.samples[s].covering_value
                                                      : trajectory.samples[s].packing_value;
    const double delta = increasing ? before - after : after - before;
    if (delta > report.step_tolerance)
      report.monotonicity_violations.push_back(
          {static_cast<int>(s), delta - report.step_tolerance});
  }
  report.violation_fraction =
      steps == 0 ? 0.0
                 : static_cast<double>(report.monotonicity_violations.size()) /
                       static_cast<double>(steps);

  const Configuration& final_sites = trajectory.samples.back().sites;
  const CriticalityDiagnosis diag = classify_critical(environment, final_sites, problem);
  report.final_centeredness = diag.active_generators;
  report.final_least_norm = diag.report.least_norm_magnitude;
  report.final_critical = diag.critical;

  // Chattering: how often a generator's step direction reverses (negative
  // dot product between consecutive displacements).
  const int n = final_sites.size();
  std::size_t reversals = 0;
  std::size_t moves = 0;
  for (std::size_t s = 2; s < trajectory.samples.size(); ++s) {
    for (int i = 0; i < n; ++i) {
      const Vec2 d1 = trajectory.samples[s - 1].sites.points[static_cast<std::size_t>(i)] -
                      trajectory.samples[s - 2].sites.points[static_cast<std::size_t>(i)];
      const Vec2 d2 = trajectory.samples[s].sites.points[static_cast<std::size_t>(i)] -
                      trajectory.samples[s - 1].sites.points[static_cast<std::size_t>(i)];
      if (d1.norm() == 0.0 || d2.norm() == 0.0) continue;
      ++moves;
      if (d1.dot(d2) < 0.0) ++reversals;
    }
  }
  report.chattering_rate =
      moves == 0 ? 0.0 : static_cast<double>(reversals) / static_cast<double>(moves);
  return report;
}

}  // namespace multicenter
