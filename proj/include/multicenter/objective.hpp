#pragma once

#include <vector>

#include "multicenter/voronoi.hpp"

// The two coverage objectives and their building blocks. The covering
// objective is the largest distance from any point of the environment to its
// nearest generator (minimized in disk covering); the packing objective is
// the largest common radius of non-overlapping disks centered at the
// generators inside the environment (maximized in sphere packing).
namespace multicenter {

// Active-set membership tolerance: 1e-7 * diameter. Wide enough to absorb
// integration noise in ties, well below distinct objective levels.
double active_tolerance(const ConvexPolygon& environment);

struct ActiveVertex {
  int cell = -1;
  Vec2 position = Vec2::Zero();
};

struct ActiveEdge {
  int cell = -1;
  int record_index = -1;  // into the cell's edge records
};

struct ActiveSets {
  std::vector<int> generators;        // cells attaining the objective value
  std::vector<ActiveVertex> vertices; // covering: vertices attaining the value
  std::vector<ActiveEdge> edges;      // packing: edges attaining the value
  double tolerance = 0.0;
};

struct ObjectiveValue {
  double value = 0.0;
  ActiveSets active;
};

// Largest distance from p to a vertex of the polygon. Throws if p lies
// outside beyond tolerance.
double farthest_vertex_distance(const ConvexPolygon& poly, const Vec2& p);

// Smallest distance from p to the polygon boundary (min over edge segments).
double boundary_clearance(const ConvexPolygon& poly, const Vec2& p);

// Largest distance from generator i to its own cell (max over cell vertices).
double cell_farthest_distance(const VoronoiPartition& partition, int i);

// Smallest escape distance of generator i: half the distance to each Voronoi
// neighbor and the distance to each environment edge touching the cell.
double cell_clearance(const VoronoiPartition& partition, int i);

ObjectiveValue covering_objective(const VoronoiPartition& partition);
ObjectiveValue packing_objective(const VoronoiPartition& partition);

// Convenience overloads that build the partition first.
ObjectiveValue covering_objective(const ConvexPolygon& environment, const Configuration& sites);
ObjectiveValue packing_objective(const ConvexPolygon& environment, const Configuration& sites);

}  // namespace multicenter
