#include "multicenter/centers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "multicenter/rng.hpp"

namespace multicenter {

namespace {

Circumcircle circle_from_two(const Vec2& a, const Vec2& b) {
  return Circumcircle{0.5 * (a + b), 0.5 * (a - b).norm()};
}

std::optional<Circumcircle> circle_from_three(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double d = 2.0 * (a.x() * (b.y() - c.y()) + b.x() * (c.y() - a.y()) +
                          c.x() * (a.y() - b.y()));
  const double scale = std::max({(a - b).norm(), (b - c).norm(), (c - a).norm()});
  if (std::abs(d) <= 1e-14 * scale * scale) return std::nullopt;  // collinear
  const double a2 = a.squaredNorm(), b2 = b.squaredNorm(), c2 = c.squaredNorm();
  const Vec2 center((a2 * (b.y() - c.y()) + b2 * (c.y() - a.y()) + c2 * (a.y() - b.y())) / d,
                    (a2 * (c.x() - b.x()) + b2 * (a.x() - c.x()) + c2 * (b.x() - a.x())) / d);
  return Circumcircle{center, (center - a).norm()};
}

bool covers(const Circumcircle& circle, std::span<const Vec2> points, double slack) {
  for (const Vec2& p : points) {
    if ((p - circle.center).norm() > circle.radius + slack) return false;
  }
  return true;
}

double coordinate_scale(std::span<const Vec2> points) {
  double scale = 0.0;
  for (const Vec2& p : points) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  return std::max(scale, 1.0);
}

Circumcircle exhaustive_circle(std::span<const Vec2> pts, double slack) {
  Circumcircle best{pts[0], 0.0};
  if (pts.size() == 1) return best;
  best.radius = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Circumcircle c = circle_from_two(pts[i], pts[j]);
      if (c.radius < best.radius && covers(c, pts, slack)) best = c;
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const auto t = circle_from_three(pts[i], pts[j], pts[k]);
        if (t && t->radius < best.radius && covers(*t, pts, slack)) best = *t;
      }
    }
  }
  return best;
}

Circumcircle incremental_circle(std::span<const Vec2> pts, double slack) {
  std::vector<Vec2> order(pts.begin(), pts.end());
  Xoshiro256 rng(0x9e3779b9ULL);  // fixed shuffle keeps results deterministic
  for (std::size_t i = order.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next() % i);
    std::swap(order[i - 1], order[j]);
  }
  auto inside = [slack](const Circumcircle& c, const Vec2& p) {
    return (p - c.center).norm() <= c.radius + slack;
  };
  Circumcircle circle{order[0], 0.0};
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (inside(circle, order[i])) continue;
    circle = Circumcircle{order[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (inside(circle, order[j])) continue;
      circle = circle_from_two(order[i], order[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (inside(circle, order[k])) continue;
        const auto t = circle_from_three(order[i], order[j], order[k]);
        if (t) circle = *t;
      }
    }
  }
  return circle;
}

}  // namespace

Circumcircle min_enclosing_circle(std::span<const Vec2> points) {
  if (points.empty()) throw GeometryError("enclosing circle of empty set");
  const double slack = 1e-12 * coordinate_scale(points);
  if (points.size() <= 12) return exhaustive_circle(points, slack);
  return incremental_circle(points, slack);
}

Circumcircle circumcenter(const ConvexPolygon& poly) {
  return min_enclosing_circle(poly.vertices());
}

IncenterSolution incenter_set(const ConvexPolygon& poly) {
  const double eps = geometry_tolerance(poly);
  const int m = poly.edge_count();
  std::vector<HalfPlane> edges(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) edges[static_cast<std::size_t>(i)] = poly.edge_halfplane(i);

  auto clearance = [&edges](const Vec2& x) {
    double r = std::numeric_limits<double>::infinity();
    for (const HalfPlane& e : edges) r = std::min(r, e.signed_distance(x));
    return r;
  };

  // Chebyshev LP: maximize r subject to n_e . x + c_e >= r. The optimum is a
  // vertex of the (x, r) polyhedron, so enumerating constraint triples finds
  // it exactly at this problem size.
  double best_r = -std::numeric_limits<double>::infinity();
  Vec2 best_x = poly.centroid();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        Eigen::Matrix3d A;
        Eigen::Vector3d rhs;
        int row = 0;
        for (int e : {i, j, k}) {
          const HalfPlane& h = edges[static_cast<std::size_t>(e)];
          A.row(row) << h.normal.x(), h.normal.y(), -1.0;
          rhs(row) = -h.offset;
          ++row;
        }
        if (std::abs(A.determinant()) <= 1e-14) continue;
        const Eigen::Vector3d sol = A.partialPivLu().solve(rhs);
        const Vec2 x(sol(0), sol(1));
        const double r = sol(2);
        if (r <= best_r || clearance(x) < r - eps) continue;
        best_r = r;
        best_x = x;
      }
    }
  }
  if (!std::isfinite(best_r)) throw GeometryError("incenter LP found no vertex solution");

  // Optimal face extraction: intersect pairs of constraint lines at level
  // best_r and keep the feasible points; the two farthest apart are the
  // endpoints of the incenter segment (Chebyshev optimal sets are segments).
  std::vector<Vec2> face_points{best_x};
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const HalfPlane& hi = edges[static_cast<std::size_t>(i)];
      const HalfPlane& hj = edges[static_cast<std::size_t>(j)];
      Eigen::Matrix2d A;
      A.row(0) = hi.normal.transpose();
      A.row(1) = hj.normal.transpose();
      if (std::abs(A.determinant()) <= 1e-12) continue;
      const Vec2 x = A.partialPivLu().solve(Vec2(best_r - hi.offset, best_r - hj.offset));
      if (clearance(x) >= best_r - 2.0 * eps) face_points.push_back(x);
    }
  }
  Segment seg{best_x, best_x};
  double extent = 0.0;
  for (std::size_t i = 0; i < face_points.size(); ++i) {
    for (std::size_t j = i + 1; j < face_points.size(); ++j) {
      const double d = (face_points[i] - face_points[j]).norm();
      if (d > extent) {
        extent = d;
        seg = Segment{face_points[i], face_points[j]};
      }
    }
  }
  if (extent <= eps) seg = Segment{best_x, best_x};
  return IncenterSolution{seg, best_r};
}

}  // namespace multicenter
