#include "multicenter/nonsmooth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

namespace multicenter {

namespace {

Vec2 unit_from(const Vec2& from, const Vec2& to_p) {
  const Vec2 d = to_p - from;
  const double len = d.norm();
  if (len == 0.0) throw GeometryError("unit vector between coincident points");
  return d / len;
}

std::vector<Vec2> as_vec2(const std::vector<GradientCandidate>& candidates) {
  std::vector<Vec2> out;
  out.reserve(candidates.size());
  for (const GradientCandidate& c : candidates) out.emplace_back(c.vector(0), c.vector(1));
  return out;
}

// Canonical key for cross-cell deduplication: the same producing element
// yields the same configuration-space candidate regardless of which cell
// assembled it.
using CandidateKey = std::tuple<int, int, int, int, int, int>;

CandidateKey key_of(const ProvenanceTag& tag) {
  std::array<int, 3> g = tag.generators;
  std::array<int, 2> e = tag.environment_edges;
  std::sort(g.begin(), g.end());
  std::sort(e.begin(), e.end());
  // Corner candidates are per-owner: the owning generator is part of the key.
  return {static_cast<int>(tag.source) >= static_cast<int>(ProvenanceTag::Source::BisectorEdge)
              ? static_cast<int>(ProvenanceTag::Source::BisectorEdge)
              : static_cast<int>(ProvenanceTag::Source::TripleVertex),
          g[0], g[1], g[2], e[0], e[1]};
}

struct CellGradientBuilder {
  const VoronoiPartition& part;
  int n;

  const Vec2& site(int j) const { return part.sites.points[static_cast<std::size_t>(j)]; }

  GradientCandidate triple_row(const Vec2& v, int i, int j, int k) const {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(2 * n);
    g.segment<2>(2 * i) = circum_vertex_weight(site(i), site(j), site(k)) * unit_from(v, site(i));
    g.segment<2>(2 * j) = circum_vertex_weight(site(j), site(k), site(i)) * unit_from(v, site(j));
    g.segment<2>(2 * k) = circum_vertex_weight(site(k), site(i), site(j)) * unit_from(v, site(k));
    ProvenanceTag tag;
    tag.source = ProvenanceTag::Source::TripleVertex;
    tag.generators = {i, j, k};
    tag.anchor = v;
    return {std::move(g), tag};
  }

  GradientCandidate boundary_row(const Vec2& v, int env_edge, int i, int j) const {
    const HalfPlane line = part.environment.edge_halfplane(env_edge);
    Eigen::VectorXd g = Eigen::VectorXd::Zero(2 * n);
    g.segment<2>(2 * i) = edge_vertex_weight(line, site(i), site(j)) * unit_from(v, site(i));
    g.segment<2>(2 * j) = edge_vertex_weight(line, site(j), site(i)) * unit_from(v, site(j));
    ProvenanceTag tag;
    tag.source = ProvenanceTag::Source::BoundaryVertex;
    tag.generators = {i, j, -1};
    tag.environment_edges = {env_edge, -1};
    tag.anchor = v;
    return {std::move(g), tag};
  }

  GradientCandidate corner_row(const Vec2& v, int i, int e, int f) const {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(2 * n);
    g.segment<2>(2 * i) = unit_from(v, site(i));
    ProvenanceTag tag;
    tag.source = ProvenanceTag::Source::CornerVertex;
    tag.generators = {i, -1, -1};
    tag.environment_edges = {e, f};
    tag.anchor = v;
    return {std::move(g), tag};
  }

  // All candidates a single achieving vertex contributes to generator i's
  // gradient. Nondegenerate vertices contribute their primary row; a
  // degenerate vertex contributes one row per pair of other defining
  // elements that forms a constructible triplet with generator i.
  void emit_vertex(const VertexRecord& rec, int i, std::vector<GradientCandidate>& out) const {
    if (!rec.degenerate) {
      switch (rec.kind) {
        case VertexKind::Triple:
          out.push_back(triple_row(rec.position, i, rec.generators[1], rec.generators[2]));
          return;
        case VertexKind::Boundary:
          out.push_back(
              boundary_row(rec.position, rec.environment_edges[0], i, rec.generators[1]));
          return;
        case VertexKind::Corner:
          out.push_back(
              corner_row(rec.position, i, rec.environment_edges[0], rec.environment_edges[1]));
          return;
      }
    }
    std::vector<DefiningElement> others;
    for (const DefiningElement& el : rec.defining) {
      if (el.type == DefiningElement::Type::Generator && el.index == i) continue;
      others.push_back(el);
    }
    for (std::size_t a = 0; a < others.size(); ++a) {
      for (std::size_t b = a + 1; b < others.size(); ++b) {
        const bool a_gen = others[a].type == DefiningElement::Type::Generator;
        const bool b_gen = others[b].type == DefiningElement::Type::Generator;
        try {
          if (a_gen && b_gen) {
            out.push_back(triple_row(rec.position, i, others[a].index, others[b].index));
          } else if (a_gen != b_gen) {
            const int j = a_gen ? others[a].index : others[b].index;
            const int e = a_gen ? others[b].index : others[a].index;
            out.push_back(boundary_row(rec.position, e, i, j));
          } else {
            out.push_back(corner_row(rec.position, i, others[a].index, others[b].index));
          }
        } catch (const GeometryError&) {
          // collinear triple or bisector parallel to the edge: the pair does
          // not determine the vertex and is skipped
        }
      }
    }
  }
};

void merge_deduplicated(const GradientSet& from, GradientSet& into,
                        std::map<CandidateKey, bool>& seen) {
  for (const GradientCandidate& c : from.candidates) {
    if (!seen.emplace(key_of(c.tag), true).second) continue;
    into.candidates.push_back(c);
  }
}

// Affine minimizer of ||sum a_l b_l||^2 with sum a_l = 1 over the corral
// columns; returns false when the bordered system is singular.
bool affine_min_norm(const std::vector<Eigen::VectorXd>& points, const std::vector<int>& corral,
                     Eigen::VectorXd& weights) {
  const int s = static_cast<int>(corral.size());
  Eigen::MatrixXd kkt(s + 1, s + 1);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      kkt(a, b) = points[static_cast<std::size_t>(corral[static_cast<std::size_t>(a)])].dot(
          points[static_cast<std::size_t>(corral[static_cast<std::size_t>(b)])]);
  kkt.row(s).setOnes();
  kkt.col(s).setOnes();
  kkt(s, s) = 0.0;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(s + 1);
  rhs(s) = 1.0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
  if (!lu.isInvertible()) return false;
  const Eigen::VectorXd sol = lu.solve(rhs);
  weights = sol.head(s);
  return true;
}

}  // namespace

double edge_vertex_weight(const HalfPlane& edge_line, const Vec2& pi, const Vec2& pj) {
  const double a = edge_line.normal.x();
  const double b = edge_line.normal.y();
  const double c = edge_line.offset;
  const Vec2 delta = pj - pi;
  const Vec2 mid = 0.5 * (pi + pj);
  const double tangential = a * delta.y() - b * delta.x();
  if (std::abs(tangential) <= 1e-9 * delta.norm())
    throw GeometryError("bisector parallel to the edge line");
  return 0.5 - (a * delta.x() + b * delta.y()) * (a * mid.x() + b * mid.y() + c) /
                   (tangential * tangential);
}

double circum_vertex_weight(const Vec2& pi, const Vec2& pj, const Vec2& pk) {
  const Vec2 dij = pj - pi;
  const Vec2 dik = pk - pi;
  const Vec2 djk = pk - pj;
  const double denom = pk.x() * dij.y() - pj.x() * dik.y() + pi.x() * djk.y();
  const double scale = std::max({dij.norm(), dik.norm(), djk.norm()});
  if (std::abs(denom) <= 1e-9 * scale * scale)
    throw GeometryError("collinear generators: circumcenter undefined");
  return 0.5 + (dij.x() * djk.x() + dij.y() * djk.y()) * (dik.x() * djk.x() + dik.y() * djk.y()) /
                   (2.0 * denom * denom);
}

GradientSet farthest_vertex_gradient(const ConvexPolygon& poly, const Vec2& p, double tol) {
  if (tol < 0.0) tol = active_tolerance(poly);
  const double value = farthest_vertex_distance(poly, p);
  GradientSet g;
  g.dimension = 2;
  for (int k = 0; k < poly.size(); ++k) {
    const Vec2& v = poly.vertex(k);
    if ((v - p).norm() < value - tol) continue;
    ProvenanceTag tag;
    tag.source = ProvenanceTag::Source::PolygonVertex;
    tag.anchor = v;
    Eigen::VectorXd grad(2);
    grad << unit_from(v, p).x(), unit_from(v, p).y();
    g.candidates.push_back({std::move(grad), tag});
  }
  return g;
}

GradientSet clearance_gradient(const ConvexPolygon& poly, const Vec2& p, double tol) {
  if (tol < 0.0) tol = active_tolerance(poly);
  const double value = boundary_clearance(poly, p);
  GradientSet g;
  g.dimension = 2;
  for (int e = 0; e < poly.edge_count(); ++e) {
    if (distance_to_segment(p, poly.edge(e)) > value + tol) continue;
    const Vec2 n = poly.edge_halfplane(e).normal;
    ProvenanceTag tag;
    tag.source = ProvenanceTag::Source::PolygonEdge;
    tag.anchor = poly.edge(e).midpoint();
    Eigen::VectorXd grad(2);
    grad << n.x(), n.y();
    g.candidates.push_back({std::move(grad), tag});
  }
  return g;
}

GradientSet cell_farthest_gradient(const VoronoiPartition& partition, int i, double tie_tol) {
  const int n = partition.size();
  const double tol = tie_tol < 0.0 ? active_tolerance(partition.environment) : tie_tol;
  const double value = cell_farthest_distance(partition, i);
  const Vec2& p = partition.sites.points[static_cast<std::size_t>(i)];
  CellGradientBuilder builder{partition, n};
  GradientSet g;
  g.dimension = 2 * n;
  for (const VertexRecord& rec : partition.vertex_records[static_cast<std::size_t>(i)]) {
    if ((rec.position - p).norm() < value - tol) continue;
    builder.emit_vertex(rec, i, g.candidates);
  }
  if (g.candidates.empty()) throw GeometryError("no achieving vertex produced a gradient row");
  return g;
}

GradientSet cell_clearance_gradient(const VoronoiPartition& partition, int i, double tie_tol) {
  const int n = partition.size();
  const double tol = tie_tol < 0.0 ? active_tolerance(partition.environment) : tie_tol;
  const double value = cell_clearance(partition, i);
  const Vec2& p = partition.sites.points[static_cast<std::size_t>(i)];
  GradientSet g;
  g.dimension = 2 * n;
  for (const EdgeRecord& rec : partition.edge_records[static_cast<std::size_t>(i)]) {
    if (rec.kind == EdgeKind::Bisector) {
      const int j = rec.neighbor;
      const double d = 0.5 * (p - partition.sites.points[static_cast<std::size_t>(j)]).norm();
      if (d > value + tol) continue;
      Eigen::VectorXd grad = Eigen::VectorXd::Zero(2 * n);
      grad.segment<2>(2 * i) = 0.5 * rec.inward_normal;
      grad.segment<2>(2 * j) = -0.5 * rec.inward_normal;
      ProvenanceTag tag;
      tag.source = ProvenanceTag::Source::BisectorEdge;
      tag.generators = {i, j, -1};
      tag.anchor = rec.segment.midpoint();
      g.candidates.push_back({std::move(grad), tag});
    } else {
      const double d = distance_to_segment(p, partition.environment.edge(rec.environment_edge));
      if (d > value + tol) continue;
      Eigen::VectorXd grad = Eigen::VectorXd::Zero(2 * n);
      grad.segment<2>(2 * i) = rec.inward_normal;
      ProvenanceTag tag;
      tag.source = ProvenanceTag::Source::BoundaryEdge;
      tag.generators = {i, -1, -1};
      tag.environment_edges = {rec.environment_edge, -1};
      tag.anchor = rec.segment.midpoint();
      g.candidates.push_back({std::move(grad), tag});
    }
  }
  if (g.candidates.empty()) throw GeometryError("no achieving edge produced a gradient row");
  return g;
}

// The generator active sets always use the standard active tolerance:
// widening them merges genuinely distinct objective levels and manufactures
// spurious critical points (opposing rows from different cells cancel).
// Within one cell the achieving set may use the integrator's wider tie
// width.
GradientSet covering_gradient(const VoronoiPartition& partition, double tie_tol) {
  const ObjectiveValue obj = covering_objective(partition);
  GradientSet g;
  g.dimension = 2 * partition.size();
  std::map<CandidateKey, bool> seen;
  for (int i : obj.active.generators)
    merge_deduplicated(cell_farthest_gradient(partition, i, tie_tol), g, seen);
  return g;
}

GradientSet packing_gradient(const VoronoiPartition& partition, double tie_tol) {
  const ObjectiveValue obj = packing_objective(partition);
  GradientSet g;
  g.dimension = 2 * partition.size();
  std::map<CandidateKey, bool> seen;
  for (int i : obj.active.generators)
    merge_deduplicated(cell_clearance_gradient(partition, i, tie_tol), g, seen);
  return g;
}

Eigen::VectorXd least_norm_point(const std::vector<Eigen::VectorXd>& points) {
  if (points.empty()) throw GeometryError("least-norm point of an empty set");
  const int count = static_cast<int>(points.size());
  double scale = 0.0;
  for (const Eigen::VectorXd& p : points) scale = std::max(scale, p.norm());
  if (scale == 0.0) return Eigen::VectorXd::Zero(points.front().size());
  const double stop_tol = 1e-14 * scale * scale;

  int start = 0;
  for (int j = 1; j < count; ++j)
    if (points[static_cast<std::size_t>(j)].norm() < points[static_cast<std::size_t>(start)].norm())
      start = j;
  std::vector<int> corral{start};
  std::vector<double> weights{1.0};
  Eigen::VectorXd x = points[static_cast<std::size_t>(start)];

  const int max_iter = 20 * count + 100;
  for (int iter = 0; iter < max_iter; ++iter) {
    // Linear minimization: the most improving candidate under the current x.
    int best = 0;
    double best_dot = x.dot(points[0]);
    for (int j = 1; j < count; ++j) {
      const double d = x.dot(points[static_cast<std::size_t>(j)]);
      if (d < best_dot) {
        best_dot = d;
        best = j;
      }
    }
    if (x.squaredNorm() - best_dot <= stop_tol) break;
    if (std::find(corral.begin(), corral.end(), best) != corral.end()) break;
    corral.push_back(best);
    weights.push_back(0.0);

    // Minor cycle: pull the affine minimizer back into the simplex, dropping
    // vertices whose weight hits zero.
    while (true) {
      Eigen::VectorXd affine;
      if (!affine_min_norm(points, corral, affine)) {
        corral.pop_back();
        weights.pop_back();
        break;
      }
      if (affine.minCoeff() > 1e-12) {
        for (std::size_t a = 0; a < corral.size(); ++a)
          weights[a] = affine(static_cast<Eigen::Index>(a));
        break;
      }
      double theta = 1.0;
      for (std::size_t a = 0; a < corral.size(); ++a) {
        const double va = affine(static_cast<Eigen::Index>(a));
        if (va < 1e-12 && weights[a] > va)
          theta = std::min(theta, weights[a] / (weights[a] - va));
      }
      std::vector<int> kept;
      std::vector<double> kept_w;
      for (std::size_t a = 0; a < corral.size(); ++a) {
        const double w = (1.0 - theta) * weights[a] + theta * affine(static_cast<Eigen::Index>(a));
        if (w > 1e-12) {
          kept.push_back(corral[a]);
          kept_w.push_back(w);
        }
      }
      if (kept.empty()) {
        kept.push_back(corral.front());
        kept_w.push_back(1.0);
      }
      corral.swap(kept);
      weights.swap(kept_w);
    }

    x.setZero();
    for (std::size_t a = 0; a < corral.size(); ++a)
      x += weights[a] * points[static_cast<std::size_t>(corral[a])];
  }
  return x;
}

CriticalityReport least_norm(const GradientSet& gradient, double eps) {
  if (gradient.candidates.empty()) throw GeometryError("least-norm of an empty gradient");
  std::vector<Eigen::VectorXd> points;
  points.reserve(gradient.candidates.size());
  for (const GradientCandidate& c : gradient.candidates) points.push_back(c.vector);
  CriticalityReport report;
  report.least_norm_vector = least_norm_point(points);
  report.least_norm_magnitude = report.least_norm_vector.norm();
  if (gradient.dimension == 2) {
    report.zero_position = zero_in_hull(as_vec2(gradient.candidates), eps);
  } else {
    report.zero_position = report.least_norm_magnitude <= eps ? HullPosition::Boundary
                                                              : HullPosition::Outside;
  }
  return report;
}

double criticality_tolerance(const ConvexPolygon& environment) {
  return 1e-6 * environment.diameter();
}

CriticalityDiagnosis classify_critical(const ConvexPolygon& environment,
                                       const Configuration& sites, Problem problem) {
  const VoronoiPartition partition = compute_partition(environment, sites);
  const double eps_crit = criticality_tolerance(environment);
  const ObjectiveValue obj = problem == Problem::Covering ? covering_objective(partition)
                                                          : packing_objective(partition);
  const GradientSet grad = problem == Problem::Covering ? covering_gradient(partition)
                                                        : packing_gradient(partition);
  CriticalityDiagnosis diag;
  diag.objective_value = obj.value;
  diag.report = least_norm(grad, eps_crit);
  diag.critical = diag.report.least_norm_magnitude <= eps_crit;
  for (int i : obj.active.generators) {
    const ConvexPolygon& cell = partition.cells[static_cast<std::size_t>(i)];
    const Vec2& p = partition.sites.points[static_cast<std::size_t>(i)];
    GeneratorCenteredness entry;
    entry.generator = i;
    if (problem == Problem::Covering) {
      entry.center_distance = (p - circumcenter(cell).center).norm();
      entry.own_gradient_zero =
          zero_in_hull(as_vec2(farthest_vertex_gradient(cell, p,
                                                        active_tolerance(environment))
                                   .candidates),
                       1e-9);
    } else {
      entry.center_distance = distance_to_segment(p, incenter_set(cell).segment);
      entry.own_gradient_zero =
          zero_in_hull(as_vec2(clearance_gradient(cell, p, active_tolerance(environment))
                                   .candidates),
                       1e-9);
    }
    diag.active_generators.push_back(entry);
  }
  return diag;
}

}  // namespace multicenter
