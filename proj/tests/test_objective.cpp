#include <doctest.h>

#include "multicenter/centers.hpp"
#include "multicenter/objective.hpp"
#include "oracles.hpp"

using namespace multicenter;

namespace {

ConvexPolygon unit_square() {
  return ConvexPolygon::from_vertices({Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)}, 1e-12);
}

Configuration two_generator_square() { return Configuration{{Vec2(0.25, 0.5), Vec2(0.75, 0.5)}}; }

}  // namespace

TEST_CASE("farthest vertex distance") {
  const ConvexPolygon square = unit_square();
  CHECK(farthest_vertex_distance(square, Vec2(0.5, 0.5)) ==
        doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
  CHECK(farthest_vertex_distance(square, Vec2(0, 0)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(farthest_vertex_distance(square, Vec2(2, 2)), GeometryError);

  // direct maximum over the 8-vertex environment's corner list
  const ConvexPolygon octagon = oracles::octagon_environment();
  double expected = 0.0;
  for (const Vec2& v : octagon.vertices()) expected = std::max(expected, v.norm());
  CHECK(farthest_vertex_distance(octagon, Vec2(0, 0)) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(std::sqrt(14.81)).epsilon(1e-12));
}

TEST_CASE("boundary clearance") {
  const ConvexPolygon square = unit_square();
  CHECK(boundary_clearance(square, Vec2(0.5, 0.5)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(boundary_clearance(square, Vec2(0.1, 0.3)) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(boundary_clearance(square, Vec2(0.7, 0.0)) == doctest::Approx(0.0));
}

TEST_CASE("per-cell farthest distance") {
  const ConvexPolygon square = unit_square();
  SUBCASE("two generators: distance to the clipped cell corner") {
    const VoronoiPartition part = compute_partition(square, two_generator_square());
    CHECK(cell_farthest_distance(part, 0) ==
          doctest::Approx(std::sqrt(0.3125)).epsilon(1e-12));
    // grid cross-check: sample the cell interior
    double sampled = 0.0;
    for (int a = 0; a <= 200; ++a)
      for (int b = 0; b <= 200; ++b) {
        const Vec2 q(0.5 * a / 200.0, b / 200.0);
        sampled = std::max(sampled, (q - Vec2(0.25, 0.5)).norm());
      }
    CHECK(cell_farthest_distance(part, 0) == doctest::Approx(sampled).epsilon(1e-6));
  }
  SUBCASE("single generator reduces to the 1-center value") {
    const Vec2 p(0.3, 0.4);
    const VoronoiPartition part = compute_partition(square, Configuration{{p}});
    CHECK(cell_farthest_distance(part, 0) ==
          doctest::Approx(farthest_vertex_distance(square, p)).epsilon(1e-12));
  }
  SUBCASE("generator at the cell circumcenter attains the circumradius") {
    Xoshiro256 rng(31);
    const ConvexPolygon poly = oracles::random_convex_polygon(rng, 6);
    const Circumcircle cc = circumcenter(poly);
    const VoronoiPartition part = compute_partition(poly, Configuration{{cc.center}});
    CHECK(cell_farthest_distance(part, 0) == doctest::Approx(cc.radius).epsilon(1e-12));
  }
}

TEST_CASE("per-cell clearance") {
  const ConvexPolygon square = unit_square();
  SUBCASE("two generators: half spacing ties the wall distance") {
    const VoronoiPartition part = compute_partition(square, two_generator_square());
    CHECK(cell_clearance(part, 0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(cell_clearance(part, 1) == doctest::Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("single generator reduces to the boundary clearance") {
    const Vec2 p(0.3, 0.4);
    const VoronoiPartition part = compute_partition(square, Configuration{{p}});
    CHECK(cell_clearance(part, 0) ==
          doctest::Approx(boundary_clearance(square, p)).epsilon(1e-12));
  }
  SUBCASE("generator at its cell incenter attains the inradius") {
    Xoshiro256 rng(32);
    const ConvexPolygon poly = oracles::random_convex_polygon(rng, 6);
    const IncenterSolution ic = incenter_set(poly);
    const VoronoiPartition part =
        compute_partition(poly, Configuration{{ic.segment.midpoint()}});
    CHECK(cell_clearance(part, 0) == doctest::Approx(ic.inradius).epsilon(1e-9));
  }
  SUBCASE("clearance equals the sampled boundary minimum") {
    Xoshiro256 rng(33);
    for (int trial = 0; trial < 5; ++trial) {
      const ConvexPolygon poly = oracles::random_convex_polygon(rng, 6, 1.5);
      Configuration config;
      for (int i = 0; i < 4; ++i) config.points.push_back(sample_point_in_polygon(rng, poly));
      const VoronoiPartition part = compute_partition(poly, config);
      for (int i = 0; i < 4; ++i) {
        const ConvexPolygon& cell = part.cells[static_cast<std::size_t>(i)];
        double sampled = std::numeric_limits<double>::infinity();
        for (int e = 0; e < cell.edge_count(); ++e) {
          const Segment edge = cell.edge(e);
          for (int k = 0; k <= 100; ++k) {
            const Vec2 q = edge.a + (k / 100.0) * (edge.b - edge.a);
            sampled = std::min(sampled, (q - config.points[static_cast<std::size_t>(i)]).norm());
          }
        }
        CHECK(cell_clearance(part, i) <= sampled + 1e-9);
        CHECK(cell_clearance(part, i) >= sampled - 0.02 * poly.diameter());
      }
    }
  }
}

TEST_CASE("covering objective") {
  const ConvexPolygon square = unit_square();
  SUBCASE("symmetric pair: both generators active") {
    const ObjectiveValue obj = covering_objective(square, two_generator_square());
    CHECK(obj.value == doctest::Approx(std::sqrt(0.3125)).epsilon(1e-12));
    CHECK(obj.active.generators == std::vector<int>{0, 1});
    CHECK(!obj.active.vertices.empty());
  }
  SUBCASE("single generator at the circumcenter attains the circumradius") {
    const Circumcircle cc = circumcenter(square);
    const ObjectiveValue obj = covering_objective(square, Configuration{{cc.center}});
    CHECK(obj.value == doctest::Approx(cc.radius).epsilon(1e-12));
  }
  SUBCASE("random five-generator configurations match the grid oracle") {
    Xoshiro256 rng(34);
    const ConvexPolygon octagon = oracles::octagon_environment();
    for (int trial = 0; trial < 3; ++trial) {
      Configuration config;
      for (int i = 0; i < 5; ++i)
        config.points.push_back(sample_point_in_polygon(rng, octagon));
      const ObjectiveValue obj = covering_objective(octagon, config);
      const double grid = oracles::grid_covering_value(octagon, config.points, 500);
      CHECK(grid <= obj.value + 1e-9);
      CHECK(obj.value - grid <= 2.0 * octagon.diameter() / 500.0);
    }
  }
}

TEST_CASE("packing objective") {
  const ConvexPolygon square = unit_square();
  SUBCASE("symmetric pair") {
    const ObjectiveValue obj = packing_objective(square, two_generator_square());
    CHECK(obj.value == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(obj.active.generators == std::vector<int>{0, 1});
  }
  SUBCASE("single generator at the incenter attains the inradius") {
    const ObjectiveValue obj = packing_objective(square, Configuration{{Vec2(0.5, 0.5)}});
    CHECK(obj.value == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("random configurations match direct enumeration") {
    Xoshiro256 rng(35);
    const ConvexPolygon octagon = oracles::octagon_environment();
    for (int trial = 0; trial < 3; ++trial) {
      Configuration config;
      for (int i = 0; i < 5; ++i)
        config.points.push_back(sample_point_in_polygon(rng, octagon));
      const ObjectiveValue obj = packing_objective(octagon, config);
      double expected = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < config.points.size(); ++i) {
        for (std::size_t j = i + 1; j < config.points.size(); ++j)
          expected = std::min(expected, 0.5 * (config.points[i] - config.points[j]).norm());
        for (int e = 0; e < octagon.edge_count(); ++e)
          expected = std::min(expected, distance_to_segment(config.points[i], octagon.edge(e)));
      }
      CHECK(obj.value == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("per-cell values bound the cell radii") {
  // the farthest distance of a cell is at least its circumradius and the
  // clearance at most its inradius, with equality exactly at the centers
  Xoshiro256 rng(37);
  const ConvexPolygon octagon = oracles::octagon_environment();
  for (int trial = 0; trial < 5; ++trial) {
    Configuration config;
    for (int i = 0; i < 5; ++i) config.points.push_back(sample_point_in_polygon(rng, octagon));
    const VoronoiPartition part = compute_partition(octagon, config);
    for (int i = 0; i < 5; ++i) {
      const ConvexPolygon& cell = part.cells[static_cast<std::size_t>(i)];
      const Circumcircle cc = circumcenter(cell);
      const IncenterSolution ic = incenter_set(cell);
      const double g = cell_farthest_distance(part, i);
      const double f = cell_clearance(part, i);
      CHECK(g >= cc.radius - 1e-9);
      CHECK(f <= ic.inradius + 1e-9);
      const Vec2& p = config.points[static_cast<std::size_t>(i)];
      if (g <= cc.radius + 1e-9) CHECK((p - cc.center).norm() < 1e-6);
      if (f >= ic.inradius - 1e-9) CHECK(distance_to_segment(p, ic.segment) < 1e-6);
    }
  }
}

TEST_CASE("both objectives are 1-Lipschitz in the stacked coordinates") {
  Xoshiro256 rng(36);
  const ConvexPolygon octagon = oracles::octagon_environment();
  for (int trial = 0; trial < 200; ++trial) {
    Configuration a, b;
    for (int i = 0; i < 5; ++i) {
      a.points.push_back(sample_point_in_polygon(rng, octagon));
      b.points.push_back(sample_point_in_polygon(rng, octagon));
    }
    double stacked = 0.0;
    for (int i = 0; i < 5; ++i)
      stacked += (a.points[static_cast<std::size_t>(i)] - b.points[static_cast<std::size_t>(i)])
                     .squaredNorm();
    stacked = std::sqrt(stacked);
    CHECK(std::abs(covering_objective(octagon, a).value - covering_objective(octagon, b).value) <=
          stacked + 1e-12);
    CHECK(std::abs(packing_objective(octagon, a).value - packing_objective(octagon, b).value) <=
          stacked + 1e-12);
  }
}
