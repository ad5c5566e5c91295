#include "multicenter/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace multicenter {

namespace {

bool lex_less(const Vec2& a, const Vec2& b) {
  if (a.x() != b.x()) return a.x() < b.x();
  return a.y() < b.y();
}

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

// Distance of p from the infinite line through a and b (0 if a == b).
double line_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 d = b - a;
  const double len = d.norm();
  if (len == 0.0) return (p - a).norm();
  return std::abs(cross2(d, p - a)) / len;
}

double signed_area(const std::vector<Vec2>& vs) {
  double acc = 0.0;
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = vs[i];
    const Vec2& q = vs[(i + 1) % n];
    acc += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * acc;
}

// Removes consecutive duplicates (within eps) and vertices within eps of the
// chord of their neighbors. Returns the cleaned chain in input orientation.
std::vector<Vec2> clean_chain(std::vector<Vec2> vs, double eps) {
  std::vector<Vec2> out;
  out.reserve(vs.size());
  for (const Vec2& v : vs) {
    if (out.empty() || (out.back() - v).norm() > eps) out.push_back(v);
  }
  while (out.size() >= 2 && (out.front() - out.back()).norm() <= eps) out.pop_back();
  // collinear removal; loop until stable since removals expose new chords
  bool changed = true;
  while (changed && out.size() >= 3) {
    changed = false;
    std::vector<Vec2> next;
    next.reserve(out.size());
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& prev = out[(i + n - 1) % n];
      const Vec2& cur = out[i];
      const Vec2& nxt = out[(i + 1) % n];
      if (line_distance(cur, prev, nxt) <= eps) {
        changed = true;
        continue;
      }
      next.push_back(cur);
    }
    out.swap(next);
  }
  return out;
}

std::vector<Vec2> rotate_to_lex_min(std::vector<Vec2> vs) {
  if (vs.empty()) return vs;
  auto it = std::min_element(vs.begin(), vs.end(), lex_less);
  std::rotate(vs.begin(), it, vs.end());
  return vs;
}

}  // namespace

HalfPlane HalfPlane::from_line(double a, double b, double c) {
  const double norm = std::hypot(a, b);
  if (norm == 0.0) throw GeometryError("half-plane with zero normal");
  return HalfPlane{Vec2(a / norm, b / norm), c / norm};
}

Vec2 project_onto_segment(const Vec2& p, const Segment& s) {
  const Vec2 d = s.b - s.a;
  const double len2 = d.squaredNorm();
  if (len2 == 0.0) return s.a;
  const double t = std::clamp((p - s.a).dot(d) / len2, 0.0, 1.0);
  return s.a + t * d;
}

double distance_to_segment(const Vec2& p, const Segment& s) {
  return (p - project_onto_segment(p, s)).norm();
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Vec2> chain, double eps) {
  for (const Vec2& v : chain) {
    if (!v.allFinite()) throw GeometryError("non-finite polygon vertex");
  }
  std::vector<Vec2> vs = clean_chain(std::move(chain), eps);
  if (vs.size() < 3) throw GeometryError("polygon needs at least 3 distinct vertices");
  if (signed_area(vs) < 0.0) std::reverse(vs.begin(), vs.end());
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& prev = vs[(i + n - 1) % n];
    const Vec2& cur = vs[i];
    const Vec2& nxt = vs[(i + 1) % n];
    if (cross2(cur - prev, nxt - cur) <= 0.0 && line_distance(cur, prev, nxt) > eps)
      throw GeometryError("polygon is not convex");
  }
  ConvexPolygon poly;
  poly.vertices_ = rotate_to_lex_min(std::move(vs));
  return poly;
}

ConvexPolygon ConvexPolygon::from_points(const std::vector<Vec2>& points, double eps) {
  return from_vertices(convex_hull2(points, eps), eps);
}

Segment ConvexPolygon::edge(int i) const {
  const int n = size();
  return Segment{vertices_[static_cast<std::size_t>(i % n)],
                 vertices_[static_cast<std::size_t>((i + 1) % n)]};
}

HalfPlane ConvexPolygon::edge_halfplane(int i) const {
  const Segment e = edge(i);
  const Vec2 d = (e.b - e.a).normalized();
  const Vec2 inward(-d.y(), d.x());  // interior lies left of each CCW edge
  return HalfPlane{inward, -inward.dot(e.a)};
}

double ConvexPolygon::area() const { return signed_area(vertices_); }

double ConvexPolygon::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      best = std::max(best, (vertices_[i] - vertices_[j]).norm());
  return best;
}

Vec2 ConvexPolygon::centroid() const {
  Vec2 acc = Vec2::Zero();
  for (const Vec2& v : vertices_) acc += v;
  return acc / static_cast<double>(vertices_.size());
}

bool ConvexPolygon::contains(const Vec2& p, double eps) const {
  for (int i = 0; i < size(); ++i) {
    if (edge_halfplane(i).signed_distance(p) < -eps) return false;
  }
  return true;
}

Vec2 ConvexPolygon::project(const Vec2& p) const {
  if (contains(p, 0.0)) return p;
  double best = std::numeric_limits<double>::infinity();
  Vec2 best_point = vertices_.front();
  for (int i = 0; i < size(); ++i) {
    const Vec2 q = project_onto_segment(p, edge(i));
    const double d = (p - q).norm();
    if (d < best) {
      best = d;
      best_point = q;
    }
  }
  return best_point;
}

double geometry_tolerance(const ConvexPolygon& poly) { return 1e-9 * poly.diameter(); }

std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& poly, const HalfPlane& h,
                                            double eps) {
  const std::vector<Vec2>& vs = poly.vertices();
  const std::size_t n = vs.size();
  std::vector<Vec2> out;
  out.reserve(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = vs[i];
    const Vec2& b = vs[(i + 1) % n];
    const double da = h.signed_distance(a);
    const double db = h.signed_distance(b);
    if (da >= -eps) out.push_back(a);
    const bool crosses = (da > eps && db < -eps) || (da < -eps && db > eps);
    if (crosses) {
      const double t = da / (da - db);
      out.push_back(a + t * (b - a));
    }
  }
  if (out.size() < 3) return std::nullopt;
  try {
    return ConvexPolygon::from_vertices(std::move(out), eps);
  } catch (const GeometryError&) {
    return std::nullopt;  // interior-empty sliver
  }
}

std::vector<Vec2> convex_hull2(std::vector<Vec2> points, double eps) {
  if (points.empty()) throw GeometryError("convex hull of empty set");
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end(),
                           [eps](const Vec2& a, const Vec2& b) { return (a - b).norm() <= eps; }),
               points.end());
  const std::size_t n = points.size();
  if (n <= 2) return points;

  // Andrew monotone chain; a point within eps of the hull chord is interior.
  auto build = [eps](const std::vector<Vec2>& pts, std::vector<Vec2>& chain) {
    for (const Vec2& p : pts) {
      while (chain.size() >= 2) {
        const Vec2& a = chain[chain.size() - 2];
        const Vec2& b = chain.back();
        if (cross2(b - a, p - a) > 0.0 && line_distance(b, a, p) > eps) break;
        chain.pop_back();
      }
      chain.push_back(p);
    }
  };
  std::vector<Vec2> lower, upper;
  build(points, lower);
  std::vector<Vec2> reversed(points.rbegin(), points.rend());
  build(reversed, upper);
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.size() == 2 && (lower[0] - lower[1]).norm() <= eps) lower.pop_back();
  return lower;
}

HullPosition zero_in_hull(const std::vector<Vec2>& points, double eps) {
  for (const Vec2& p : points) {
    if (!p.allFinite()) throw GeometryError("non-finite vector in hull test");
  }
  // Build the hull with a tolerance well below the classification band so
  // boundary decisions come from eps alone.
  const std::vector<Vec2> hull = convex_hull2(points, 1e-3 * eps);
  if (hull.size() == 1) {
    return hull[0].norm() <= eps ? HullPosition::Boundary : HullPosition::Outside;
  }
  if (hull.size() == 2) {
    const double d = distance_to_segment(Vec2::Zero(), Segment{hull[0], hull[1]});
    return d <= eps ? HullPosition::Boundary : HullPosition::Outside;
  }
  double min_signed = std::numeric_limits<double>::infinity();
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = hull[i];
    const Vec2& b = hull[(i + 1) % n];
    const Vec2 d = (b - a).normalized();
    const Vec2 inward(-d.y(), d.x());
    min_signed = std::min(min_signed, inward.dot(-a));
  }
  if (min_signed > eps) return HullPosition::Interior;
  if (min_signed >= -eps) return HullPosition::Boundary;
  return HullPosition::Outside;
}

}  // namespace multicenter
