#include "multicenter/objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace multicenter {

double active_tolerance(const ConvexPolygon& environment) {
  return 1e-7 * environment.diameter();
}

double farthest_vertex_distance(const ConvexPolygon& poly, const Vec2& p) {
  if (!poly.contains(p, geometry_tolerance(poly)))
    throw GeometryError("point outside the polygon");
  double best = 0.0;
  for (const Vec2& v : poly.vertices()) best = std::max(best, (v - p).norm());
  return best;
}

double boundary_clearance(const ConvexPolygon& poly, const Vec2& p) {
  if (!poly.contains(p, geometry_tolerance(poly)))
    throw GeometryError("point outside the polygon");
  double best = std::numeric_limits<double>::infinity();
  for (int e = 0; e < poly.edge_count(); ++e)
    best = std::min(best, distance_to_segment(p, poly.edge(e)));
  return best;
}

double cell_farthest_distance(const VoronoiPartition& partition, int i) {
  const Vec2& p = partition.sites.points[static_cast<std::size_t>(i)];
  double best = 0.0;
  for (const Vec2& v : partition.cells[static_cast<std::size_t>(i)].vertices())
    best = std::max(best, (v - p).norm());
  return best;
}

double cell_clearance(const VoronoiPartition& partition, int i) {
  const Vec2& p = partition.sites.points[static_cast<std::size_t>(i)];
  double best = std::numeric_limits<double>::infinity();
  for (int j : neighbors(partition, i))
    best = std::min(best, 0.5 * (p - partition.sites.points[static_cast<std::size_t>(j)]).norm());
  for (const EdgeRecord& rec : partition.edge_records[static_cast<std::size_t>(i)]) {
    if (rec.kind != EdgeKind::Boundary) continue;
    best = std::min(best,
                    distance_to_segment(p, partition.environment.edge(rec.environment_edge)));
  }
  return best;
}

ObjectiveValue covering_objective(const VoronoiPartition& partition) {
  const int n = partition.size();
  std::vector<double> per_cell(static_cast<std::size_t>(n));
  double value = 0.0;
  for (int i = 0; i < n; ++i) {
    per_cell[static_cast<std::size_t>(i)] = cell_farthest_distance(partition, i);
    value = std::max(value, per_cell[static_cast<std::size_t>(i)]);
  }
  ObjectiveValue out;
  out.value = value;
  out.active.tolerance = active_tolerance(partition.environment);
  for (int i = 0; i < n; ++i) {
    if (per_cell[static_cast<std::size_t>(i)] < value - out.active.tolerance) continue;
    out.active.generators.push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    const Vec2& p = partition.sites.points[static_cast<std::size_t>(i)];
    for (const VertexRecord& rec : partition.vertex_records[static_cast<std::size_t>(i)]) {
      if ((rec.position - p).norm() >= value - out.active.tolerance)
        out.active.vertices.push_back({i, rec.position});
    }
  }
  return out;
}

ObjectiveValue packing_objective(const VoronoiPartition& partition) {
  const int n = partition.size();
  std::vector<double> per_cell(static_cast<std::size_t>(n));
  double value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    per_cell[static_cast<std::size_t>(i)] = cell_clearance(partition, i);
    value = std::min(value, per_cell[static_cast<std::size_t>(i)]);
  }
  ObjectiveValue out;
  out.value = value;
  out.active.tolerance = active_tolerance(partition.environment);
  for (int i = 0; i < n; ++i) {
    if (per_cell[static_cast<std::size_t>(i)] > value + out.active.tolerance) continue;
    out.active.generators.push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    const Vec2& p = partition.sites.points[static_cast<std::size_t>(i)];
    const auto& recs = partition.edge_records[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < recs.size(); ++k) {
      const EdgeRecord& rec = recs[k];
      const double d = rec.kind == EdgeKind::Bisector
                           ? 0.5 * (p - partition.sites.points[static_cast<std::size_t>(
                                            rec.neighbor)]).norm()
                           : distance_to_segment(
                                 p, partition.environment.edge(rec.environment_edge));
      if (d <= value + out.active.tolerance)
        out.active.edges.push_back({i, static_cast<int>(k)});
    }
  }
  return out;
}

ObjectiveValue covering_objective(const ConvexPolygon& environment, const Configuration& sites) {
  return covering_objective(compute_partition(environment, sites));
}

ObjectiveValue packing_objective(const ConvexPolygon& environment, const Configuration& sites) {
  return packing_objective(compute_partition(environment, sites));
}

}  // namespace multicenter
