#pragma once

#include <string>

#include "multicenter/flows.hpp"

namespace multicenter {

struct SvgOptions {
  bool draw_circumcircles = false;
  bool draw_incircles = false;
};

// One frame: environment outline, Voronoi edges, generator dots, optional
// per-cell circles.
std::string render_partition_svg(const VoronoiPartition& partition,
                                 const SvgOptions& options = {});

// Trajectory overlay: final partition plus the path of every generator.
std::string render_trajectory_svg(const ConvexPolygon& environment, const Trajectory& trajectory,
                                  const SvgOptions& options = {});

}  // namespace multicenter
