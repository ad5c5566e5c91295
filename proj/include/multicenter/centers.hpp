#pragma once

#include <span>

#include "multicenter/geometry.hpp"

// Minimum enclosing circle and Chebyshev-center solvers for convex polygons.
namespace multicenter {

struct Circumcircle {
  Vec2 center = Vec2::Zero();
  double radius = 0.0;
};

// Full set of deepest points (a segment, possibly degenerate) together with
// the common clearance radius.
struct IncenterSolution {
  Segment segment;
  double inradius = 0.0;
};

// Minimum enclosing circle of a point set. Exhaustive pair/triple search for
// up to 12 points, randomized incremental (move-to-front) beyond that.
Circumcircle min_enclosing_circle(std::span<const Vec2> points);

// Center/radius of the smallest circle containing the polygon's vertices.
Circumcircle circumcenter(const ConvexPolygon& poly);

// Maximizes the inradius subject to edge clearance constraints and extracts
// the full optimal face, which for a convex polygon is a segment.
IncenterSolution incenter_set(const ConvexPolygon& poly);

}  // namespace multicenter
