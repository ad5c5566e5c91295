#include "multicenter/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace multicenter {

namespace {

// Half-plane of points at least as close to `site` as to `other`.
HalfPlane bisector_halfplane(const Vec2& site, const Vec2& other) {
  const Vec2 n = (site - other).normalized();
  const Vec2 mid = 0.5 * (site + other);
  return HalfPlane{n, -n.dot(mid)};
}

VertexRecord classify_vertex(const Vec2& v, int owner, const ConvexPolygon& env,
                             const Configuration& sites, double eps) {
  VertexRecord rec;
  rec.position = v;
  const double own_dist = (v - sites.points[static_cast<std::size_t>(owner)]).norm();

  std::vector<int> gens;
  for (int j = 0; j < sites.size(); ++j) {
    if (std::abs((v - sites.points[static_cast<std::size_t>(j)]).norm() - own_dist) <= eps)
      gens.push_back(j);
  }
  std::vector<int> env_edges;
  for (int e = 0; e < env.edge_count(); ++e) {
    if (distance_to_segment(v, env.edge(e)) <= eps) env_edges.push_back(e);
  }

  // owner first so the primary triplet always contains the cell's generator
  auto it = std::find(gens.begin(), gens.end(), owner);
  if (it == gens.end()) throw GeometryError("cell vertex not equidistant to its own generator");
  std::rotate(gens.begin(), it, it + 1);

  for (int g : gens) rec.defining.push_back({DefiningElement::Type::Generator, g});
  for (int e : env_edges) rec.defining.push_back({DefiningElement::Type::EnvironmentEdge, e});
  rec.degenerate = rec.defining.size() > 3;

  if (env_edges.size() >= 2) {
    rec.kind = VertexKind::Corner;
    rec.generators = {owner, -1, -1};
    rec.environment_edges = {env_edges[0], env_edges[1]};
  } else if (env_edges.size() == 1) {
    if (gens.size() < 2) throw GeometryError("boundary vertex lacks a second generator");
    rec.kind = VertexKind::Boundary;
    rec.generators = {owner, gens[1], -1};
    rec.environment_edges = {env_edges[0], -1};
  } else {
    if (gens.size() < 3) throw GeometryError("interior vertex lacks three generators");
    rec.kind = VertexKind::Triple;
    rec.generators = {owner, gens[1], gens[2]};
  }
  return rec;
}

EdgeRecord classify_edge(const Segment& seg, int owner, const ConvexPolygon& env,
                         const Configuration& sites, double eps) {
  EdgeRecord rec;
  rec.segment = seg;
  const Vec2 mid = seg.midpoint();

  // Boundary edges are detected by incidence of the midpoint with the
  // environment boundary; everything else is a bisector shared with the
  // equidistant generator.
  for (int e = 0; e < env.edge_count(); ++e) {
    if (distance_to_segment(mid, env.edge(e)) <= eps) {
      rec.kind = EdgeKind::Boundary;
      rec.environment_edge = e;
      rec.inward_normal = env.edge_halfplane(e).normal;
      return rec;
    }
  }
  const Vec2 own = sites.points[static_cast<std::size_t>(owner)];
  const double own_dist = (mid - own).norm();
  int best = -1;
  double best_diff = std::numeric_limits<double>::infinity();
  for (int j = 0; j < sites.size(); ++j) {
    if (j == owner) continue;
    const double diff = std::abs((mid - sites.points[static_cast<std::size_t>(j)]).norm() - own_dist);
    if (diff < best_diff) {
      best_diff = diff;
      best = j;
    }
  }
  if (best < 0 || best_diff > eps)
    throw GeometryError("cell edge is neither on the boundary nor on a bisector");
  rec.kind = EdgeKind::Bisector;
  rec.neighbor = best;
  rec.inward_normal = (own - sites.points[static_cast<std::size_t>(best)]).normalized();
  return rec;
}

}  // namespace

VoronoiPartition compute_partition(const ConvexPolygon& environment, const Configuration& sites) {
  const double eps = geometry_tolerance(environment);
  const int n = sites.size();
  if (n == 0) throw GeometryError("empty configuration");
  for (int i = 0; i < n; ++i) {
    const Vec2& p = sites.points[static_cast<std::size_t>(i)];
    if (!p.allFinite()) throw GeometryError("non-finite generator position");
    if (!environment.contains(p, eps)) throw GeometryError("generator outside the environment");
    for (int j = i + 1; j < n; ++j) {
      if ((p - sites.points[static_cast<std::size_t>(j)]).norm() < eps)
        throw GeometryError("coincident generators: bisector undefined");
    }
  }

  VoronoiPartition part;
  part.environment = environment;
  part.sites = sites;
  part.tolerance = eps;
  part.cells.reserve(static_cast<std::size_t>(n));

  for (int i = 0; i < n; ++i) {
    std::optional<ConvexPolygon> cell = environment;
    for (int j = 0; j < n && cell; ++j) {
      if (j == i) continue;
      cell = clip_halfplane(*cell, bisector_halfplane(sites.points[static_cast<std::size_t>(i)],
                                                      sites.points[static_cast<std::size_t>(j)]),
                            eps);
    }
    if (!cell) throw GeometryError("Voronoi cell collapsed to an empty region");
    part.cells.push_back(*cell);
  }

  part.vertex_records.resize(static_cast<std::size_t>(n));
  part.edge_records.resize(static_cast<std::size_t>(n));
  part.neighbor_sets.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const ConvexPolygon& cell = part.cells[static_cast<std::size_t>(i)];
    auto& vrecs = part.vertex_records[static_cast<std::size_t>(i)];
    auto& erecs = part.edge_records[static_cast<std::size_t>(i)];
    for (int k = 0; k < cell.size(); ++k)
      vrecs.push_back(classify_vertex(cell.vertex(k), i, environment, sites, eps));
    for (int k = 0; k < cell.edge_count(); ++k)
      erecs.push_back(classify_edge(cell.edge(k), i, environment, sites, eps));
  }

  // Neighbor relation from bisector edges of positive length; kept symmetric
  // by inserting both directions.
  for (int i = 0; i < n; ++i) {
    for (const EdgeRecord& rec : part.edge_records[static_cast<std::size_t>(i)]) {
      if (rec.kind != EdgeKind::Bisector || rec.segment.length() <= eps) continue;
      auto& a = part.neighbor_sets[static_cast<std::size_t>(i)];
      auto& b = part.neighbor_sets[static_cast<std::size_t>(rec.neighbor)];
      if (std::find(a.begin(), a.end(), rec.neighbor) == a.end()) a.push_back(rec.neighbor);
      if (std::find(b.begin(), b.end(), i) == b.end()) b.push_back(i);
    }
  }
  for (auto& set : part.neighbor_sets) std::sort(set.begin(), set.end());
  return part;
}

const std::vector<int>& neighbors(const VoronoiPartition& partition, int i) {
  return partition.neighbor_sets[static_cast<std::size_t>(i)];
}

}  // namespace multicenter
