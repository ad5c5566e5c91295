#include "multicenter/rng.hpp"

#include <limits>

namespace multicenter {

Vec2 sample_point_in_polygon(Xoshiro256& rng, const ConvexPolygon& poly) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const Vec2& v : poly.vertices()) {
    xmin = std::min(xmin, v.x());
    xmax = std::max(xmax, v.x());
    ymin = std::min(ymin, v.y());
    ymax = std::max(ymax, v.y());
  }
  while (true) {
    const Vec2 p(rng.uniform(xmin, xmax), rng.uniform(ymin, ymax));
    if (poly.contains(p, 0.0)) return p;
  }
}

}  // namespace multicenter
