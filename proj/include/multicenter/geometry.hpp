#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <vector>

// Planar primitives with explicit coincidence tolerances: convex polygons,
// half-plane clipping, projections, small convex hulls, and the
// origin-in-hull classification used by criticality tests.
namespace multicenter {

using Vec2 = Eigen::Vector2d;

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Closed half-plane {p : normal.dot(p) + offset >= 0} with unit normal.
struct HalfPlane {
  Vec2 normal;
  double offset = 0.0;

  // Builds from line coefficients a*x + b*y + c = 0, normalized so that
  // a^2 + b^2 = 1. Throws if (a, b) vanishes.
  static HalfPlane from_line(double a, double b, double c);

  double signed_distance(const Vec2& p) const { return normal.dot(p) + offset; }
  bool contains(const Vec2& p, double eps) const { return signed_distance(p) >= -eps; }
};

// Segment between two points; endpoints may coincide (degenerate point).
struct Segment {
  Vec2 a = Vec2::Zero();
  Vec2 b = Vec2::Zero();

  double length() const { return (b - a).norm(); }
  Vec2 midpoint() const { return 0.5 * (a + b); }
};

// Closest point of the segment to p.
Vec2 project_onto_segment(const Vec2& p, const Segment& s);
double distance_to_segment(const Vec2& p, const Segment& s);

// Strictly convex polygon stored counterclockwise with the lexicographically
// smallest vertex first (deterministic equality and golden files).
class ConvexPolygon {
 public:
  // Default-constructed polygons are empty placeholders; every factory below
  // returns a validated polygon.
  ConvexPolygon() = default;

  // Interprets `chain` as a boundary walk (either orientation), canonicalizes
  // it, and validates convexity. Throws GeometryError on fewer than 3
  // effective vertices or a reflex turn beyond `eps`.
  static ConvexPolygon from_vertices(std::vector<Vec2> chain, double eps);

  // Convex hull of an arbitrary point set; throws if the hull is degenerate.
  static ConvexPolygon from_points(const std::vector<Vec2>& points, double eps);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const Vec2& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }

  // Edge i runs from vertex i to vertex i+1 (mod size).
  Segment edge(int i) const;
  int edge_count() const { return size(); }

  // Inward half-plane of edge i; the polygon is the intersection of these.
  HalfPlane edge_halfplane(int i) const;

  double area() const;
  double diameter() const;  // max pairwise vertex distance
  Vec2 centroid() const;

  bool contains(const Vec2& p, double eps) const;
  // Nearest point of the (closed) polygon to p; identity for interior points.
  Vec2 project(const Vec2& p) const;

  bool operator==(const ConvexPolygon& other) const { return vertices_ == other.vertices_; }

 private:
  std::vector<Vec2> vertices_;
};

// Scale-invariant coincidence tolerance used throughout: 1e-9 * diameter.
double geometry_tolerance(const ConvexPolygon& poly);

// Intersection of `poly` with the half-plane. Returns std::nullopt when the
// intersection has empty interior (slivers collapse to the empty marker).
std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& poly, const HalfPlane& h,
                                            double eps);

// Extreme points of the convex hull in counterclockwise order starting from
// the lexicographically smallest point. Collinear interior points are removed
// using `eps`. Degenerate hulls yield one or two points.
std::vector<Vec2> convex_hull2(std::vector<Vec2> points, double eps);

enum class HullPosition { Outside, Boundary, Interior };

// Position of the origin relative to co(points), with a boundary band of
// width eps.
HullPosition zero_in_hull(const std::vector<Vec2>& points, double eps);

}  // namespace multicenter
