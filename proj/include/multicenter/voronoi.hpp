#pragma once

#include <array>
#include <vector>

#include "multicenter/geometry.hpp"

// Bounded Voronoi partition of a convex environment with the vertex/edge
// taxonomy the gradient assembly depends on: vertices are classified by the
// elements (generators and environment edges) that determine them, edges by
// whether they lie on a bisector or on the environment boundary.
namespace multicenter {

// Ordered generator positions inside the environment.
struct Configuration {
  std::vector<Vec2> points;

  int size() const { return static_cast<int>(points.size()); }
};

// What a Voronoi vertex is determined by: a generator index or an
// environment edge index.
struct DefiningElement {
  enum class Type { Generator, EnvironmentEdge };
  Type type = Type::Generator;
  int index = -1;

  bool operator==(const DefiningElement&) const = default;
};

enum class VertexKind {
  Triple,    // circumcenter of three generators
  Boundary,  // environment edge meets the bisector of two generators
  Corner,    // vertex of the environment
};

struct VertexRecord {
  Vec2 position = Vec2::Zero();
  VertexKind kind = VertexKind::Corner;
  // Generators in the primary classification; slot use depends on kind:
  // Triple: {i, j, k}; Boundary: {i, j, -1}; Corner: {i, -1, -1}.
  std::array<int, 3> generators{-1, -1, -1};
  // Environment edges in the primary classification: Boundary uses slot 0,
  // Corner uses both slots.
  std::array<int, 2> environment_edges{-1, -1};
  // Every element whose defining distance/incidence matches within the
  // tolerance; more than 3 entries marks the vertex degenerate.
  std::vector<DefiningElement> defining;
  bool degenerate = false;
};

enum class EdgeKind {
  Bisector,  // shared with a neighboring cell
  Boundary,  // lies on the environment boundary
};

struct EdgeRecord {
  Segment segment;
  EdgeKind kind = EdgeKind::Boundary;
  int neighbor = -1;          // Bisector: the other generator
  int environment_edge = -1;  // Boundary: index into the environment's edges
  Vec2 inward_normal = Vec2::Zero();  // points toward the cell interior
                                      // (Bisector) or the environment
                                      // interior (Boundary)
};

struct VoronoiPartition {
  ConvexPolygon environment;
  Configuration sites;
  double tolerance = 0.0;  // coincidence tolerance the records were built with
  std::vector<ConvexPolygon> cells;
  std::vector<std::vector<VertexRecord>> vertex_records;  // per cell
  std::vector<std::vector<EdgeRecord>> edge_records;      // per cell
  std::vector<std::vector<int>> neighbor_sets;            // sorted, symmetric

  int size() const { return sites.size(); }
};

// Builds the partition by clipping the environment with bisector half-planes
// and classifies every cell vertex and edge. Throws GeometryError when two
// generators coincide within tolerance or a generator lies outside.
VoronoiPartition compute_partition(const ConvexPolygon& environment, const Configuration& sites);

// Voronoi neighbors of generator i (cells sharing a full edge, not a point).
const std::vector<int>& neighbors(const VoronoiPartition& partition, int i);

}  // namespace multicenter
