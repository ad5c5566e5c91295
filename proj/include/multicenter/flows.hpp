#pragma once

#include <string>
#include <vector>

#include "multicenter/nonsmooth.hpp"

// Numerical realization of the six coverage dynamics: centralized and
// distributed nonsmooth gradient flows plus the geometric-centering flows
// toward the circumcenter / incenter of each cell. Integration is fixed-step
// forward Euler with a projection clamp onto the environment; the
// discontinuous fields are followed directly, so sliding shows up as bounded
// chattering of order dt times the speed.
namespace multicenter {

enum class FlowKind {
  GradientCovering,             // full gradient descent of the covering objective
  GradientPacking,              // full gradient ascent of the packing objective
  DistributedGradientCovering,  // per-cell descent: toward own farthest vertex
  DistributedGradientPacking,   // per-cell ascent: away from nearest neighbor/wall
  LloydCircumcenter,            // toward the circumcenter of own cell
  LloydIncenter,                // toward the incenter set of own cell
};

struct FlowSpec {
  FlowKind kind = FlowKind::LloydCircumcenter;
  double dt = 0.01;
  double t_max = 20.0;
  double stop_tol = 0.0;  // displacement per unit time; 0 disables early stop
};

struct TrajectorySample {
  double t = 0.0;
  Configuration sites;
  double covering_value = 0.0;
  double packing_value = 0.0;
  std::vector<double> speeds;  // per-generator velocity magnitude at this state
};

enum class Termination { Converged, TimeLimit, Error };

struct Trajectory {
  FlowKind kind = FlowKind::LloydCircumcenter;
  double dt = 0.0;
  std::vector<TrajectorySample> samples;
  Termination terminated_by = Termination::TimeLimit;
  std::string error;                    // set when terminated_by == Error
  double max_boundary_violation = 0.0;  // worst pre-projection excursion
};

// Instantaneous generator velocities for the given dynamics. The incenter
// inclusion is resolved by steering toward the nearest point of the incenter
// segment. `tie_tol` is the achieving-set width for the gradient kinds;
// negative means the environment's active_tolerance. The integrator passes a
// step-scaled width so ties reachable within one Euler step are already part
// of the assembled gradient, which turns chattering across discontinuity
// surfaces into sliding along them.
std::vector<Vec2> flow_velocity(FlowKind kind, const ConvexPolygon& environment,
                                const Configuration& sites, double tie_tol = -1.0);

// Forward-Euler integration: stops early once the largest per-generator
// displacement over the trailing 10 steps falls below stop_tol * dt * 10.
// Geometry failures terminate with Error and the partial trajectory.
Trajectory integrate(const FlowSpec& spec, const ConvexPolygon& environment,
                     const Configuration& initial);

struct MonotonicityViolation {
  int step = 0;       // sample index the violation was detected at
  double excess = 0;  // amount beyond the per-step tolerance
};

struct DiagnosticsReport {
  // The objective the flow extremizes must move monotonically up to the
  // per-step tolerance 10*dt^2 + active tolerance.
  std::vector<MonotonicityViolation> monotonicity_violations;
  double violation_fraction = 0.0;
  double step_tolerance = 0.0;
  std::vector<GeneratorCenteredness> final_centeredness;  // active generators
  double final_least_norm = 0.0;
  bool final_critical = false;
  double chattering_rate = 0.0;  // fraction of steps reversing a generator's direction
};

DiagnosticsReport diagnose(const Trajectory& trajectory, const ConvexPolygon& environment,
                           Problem problem);

// The objective each flow drives, and the direction it should move.
Problem flow_problem(FlowKind kind);
bool flow_increases_objective(FlowKind kind);

}  // namespace multicenter
