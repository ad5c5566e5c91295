#pragma once

#include <array>
#include <vector>

#include "multicenter/centers.hpp"
#include "multicenter/objective.hpp"

// Generalized-gradient assembly for the coverage objectives and the
// least-norm machinery that turns them into descent directions. A gradient
// here is a finite candidate list whose convex hull is the generalized
// gradient; candidates carry provenance so tests and diagnostics can tell
// which vertex or edge produced them.
namespace multicenter {

struct ProvenanceTag {
  enum class Source {
    PolygonVertex,   // 1-center: farthest polygon vertex
    PolygonEdge,     // 1-center: nearest polygon edge
    TripleVertex,    // cell vertex determined by three generators
    BoundaryVertex,  // cell vertex on an environment edge
    CornerVertex,    // environment corner
    BisectorEdge,    // cell edge shared with a neighbor
    BoundaryEdge,    // cell edge on the environment boundary
  };
  Source source = Source::PolygonVertex;
  std::array<int, 3> generators{-1, -1, -1};
  std::array<int, 2> environment_edges{-1, -1};
  Vec2 anchor = Vec2::Zero();  // producing vertex position or edge midpoint
};

struct GradientCandidate {
  Eigen::VectorXd vector;
  ProvenanceTag tag;
};

struct GradientSet {
  int dimension = 2;  // 2 for 1-center gradients, 2n for configuration space
  std::vector<GradientCandidate> candidates;
};

struct CriticalityReport {
  // For dimension 2 this is the exact hull classification; in configuration
  // space only Outside / Boundary are reported, decided by the least-norm
  // magnitude against the tolerance passed to least_norm().
  HullPosition zero_position = HullPosition::Outside;
  Eigen::VectorXd least_norm_vector;
  double least_norm_magnitude = 0.0;
};

// Sensitivity weight of a vertex pinned to an environment edge by the
// bisector of pi and pj: the tangential displacement ratio of the vertex
// against the generator pair. The two orderings sum to 1. Throws when the
// bisector is parallel to the edge line.
double edge_vertex_weight(const HalfPlane& edge_line, const Vec2& pi, const Vec2& pj);

// Sensitivity weight of a vertex determined by three generators (their
// circumcenter), distinguished in the first argument; symmetric in the last
// two, and the three rotations sum to 1. Throws on collinear generators.
double circum_vertex_weight(const Vec2& pi, const Vec2& pj, const Vec2& pk);

// Gradient of the farthest-vertex distance at p: unit vectors from each
// achieving vertex toward p. `tol` selects achieving vertices; negative
// means the polygon's own active_tolerance.
GradientSet farthest_vertex_gradient(const ConvexPolygon& poly, const Vec2& p, double tol = -1.0);

// Gradient of the boundary clearance at p: inward normals of achieving edges.
GradientSet clearance_gradient(const ConvexPolygon& poly, const Vec2& p, double tol = -1.0);

// Configuration-space gradient (dimension 2n) of generator i's farthest cell
// distance: one candidate per achieving cell vertex, with weight-scaled unit
// vectors in the places of the generators defining the vertex. Degenerate
// vertices contribute one candidate per admissible defining triplet.
// `tie_tol` selects achieving elements; negative means the environment's
// active_tolerance. Integrators pass a step-scaled width here so that ties
// crossed within one step are captured and resolved by sliding instead of
// chattering.
GradientSet cell_farthest_gradient(const VoronoiPartition& partition, int i,
                                   double tie_tol = -1.0);

// Configuration-space gradient of generator i's clearance: one candidate per
// achieving cell edge.
GradientSet cell_clearance_gradient(const VoronoiPartition& partition, int i,
                                    double tie_tol = -1.0);

// Gradients of the multi-center objectives: candidate union over active
// generators, deduplicated across cells that share the producing element.
// `tie_tol` widens both the active-generator selection and the per-cell
// achieving sets.
GradientSet covering_gradient(const VoronoiPartition& partition, double tie_tol = -1.0);
GradientSet packing_gradient(const VoronoiPartition& partition, double tie_tol = -1.0);

// Minimum-norm point of the convex hull of `points` (Wolfe's method with an
// affinely independent corral). Exact on small candidate sets up to
// floating-point noise.
Eigen::VectorXd least_norm_point(const std::vector<Eigen::VectorXd>& points);

// Least-norm element of the gradient plus the zero-position classification,
// using `eps` as the coincidence band.
CriticalityReport least_norm(const GradientSet& gradient, double eps = 1e-9);

enum class Problem { Covering, Packing };

struct GeneratorCenteredness {
  int generator = -1;
  double center_distance = 0.0;        // to the cell circumcenter / incenter set
  HullPosition own_gradient_zero = HullPosition::Outside;  // per-cell 1-center test
};

struct CriticalityDiagnosis {
  double objective_value = 0.0;
  CriticalityReport report;
  bool critical = false;  // least-norm magnitude within criticality tolerance
  std::vector<GeneratorCenteredness> active_generators;
};

// Criticality declaration tolerance: 1e-6 * diameter.
double criticality_tolerance(const ConvexPolygon& environment);

CriticalityDiagnosis classify_critical(const ConvexPolygon& environment,
                                       const Configuration& sites, Problem problem);

}  // namespace multicenter
