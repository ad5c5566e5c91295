#include "multicenter/svg.hpp"

#include <cstdio>
#include <sstream>

#include "multicenter/centers.hpp"

namespace multicenter {

namespace {

struct Frame {
  double xmin, ymin, width, height, stroke;
};

Frame frame_of(const ConvexPolygon& env) {
  double xmin = env.vertex(0).x(), xmax = xmin, ymin = env.vertex(0).y(), ymax = ymin;
  for (const Vec2& v : env.vertices()) {
    xmin = std::min(xmin, v.x());
    xmax = std::max(xmax, v.x());
    ymin = std::min(ymin, v.y());
    ymax = std::max(ymax, v.y());
  }
  const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin);
  return Frame{xmin - pad, ymin - pad, (xmax - xmin) + 2 * pad, (ymax - ymin) + 2 * pad,
               0.004 * std::max(xmax - xmin, ymax - ymin)};
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void open_svg(std::ostringstream& out, const Frame& f) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(f.xmin) << " "
      << num(f.ymin) << " " << num(f.width) << " " << num(f.height) << "\">\n"
      // flip y so larger y draws upward
      << "<g transform=\"translate(0," << num(2 * f.ymin + f.height) << ") scale(1,-1)\">\n";
}

void close_svg(std::ostringstream& out) { out << "</g>\n</svg>\n"; }

void polygon_element(std::ostringstream& out, const ConvexPolygon& poly, const char* stroke,
                     double width, const char* fill) {
  out << "<polygon points=\"";
  for (const Vec2& v : poly.vertices()) out << num(v.x()) << "," << num(v.y()) << " ";
  out << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width)
      << "\"/>\n";
}

void circle_element(std::ostringstream& out, const Vec2& c, double r, const char* stroke,
                    double width, const char* fill) {
  out << "<circle cx=\"" << num(c.x()) << "\" cy=\"" << num(c.y()) << "\" r=\"" << num(r)
      << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width)
      << "\"/>\n";
}

void draw_partition(std::ostringstream& out, const VoronoiPartition& part, const Frame& f,
                    const SvgOptions& options) {
  for (const ConvexPolygon& cell : part.cells)
    polygon_element(out, cell, "#4477aa", 0.6 * f.stroke, "none");
  polygon_element(out, part.environment, "#000000", f.stroke, "none");
  for (std::size_t i = 0; i < part.cells.size(); ++i) {
    if (options.draw_circumcircles) {
      const Circumcircle c = circumcenter(part.cells[i]);
      circle_element(out, c.center, c.radius, "#cc6677", 0.5 * f.stroke, "none");
    }
    if (options.draw_incircles) {
      const IncenterSolution ic = incenter_set(part.cells[i]);
      circle_element(out, ic.segment.midpoint(), ic.inradius, "#117733", 0.5 * f.stroke, "none");
    }
    circle_element(out, part.sites.points[i], 1.6 * f.stroke, "none", 0.0, "#000000");
  }
}

}  // namespace

std::string render_partition_svg(const VoronoiPartition& partition, const SvgOptions& options) {
  const Frame f = frame_of(partition.environment);
  std::ostringstream out;
  open_svg(out, f);
  draw_partition(out, partition, f, options);
  close_svg(out);
  return out.str();
}

std::string render_trajectory_svg(const ConvexPolygon& environment, const Trajectory& trajectory,
                                  const SvgOptions& options) {
  const Frame f = frame_of(environment);
  std::ostringstream out;
  open_svg(out, f);
  if (!trajectory.samples.empty()) {
    const Configuration& final_sites = trajectory.samples.back().sites;
    const VoronoiPartition part = compute_partition(environment, final_sites);
    draw_partition(out, part, f, options);
    const int n = final_sites.size();
    for (int i = 0; i < n; ++i) {
      out << "<polyline fill=\"none\" stroke=\"#882255\" stroke-width=\"" << num(0.5 * f.stroke)
          << "\" points=\"";
      for (const TrajectorySample& sample : trajectory.samples) {
        const Vec2& p = sample.sites.points[static_cast<std::size_t>(i)];
        out << num(p.x()) << "," << num(p.y()) << " ";
      }
      out << "\"/>\n";
      circle_element(out, trajectory.samples.front().sites.points[static_cast<std::size_t>(i)],
                     1.2 * f.stroke, "none", 0.0, "#882255");
    }
  } else {
    polygon_element(out, environment, "#000000", f.stroke, "none");
  }
  close_svg(out);
  return out.str();
}

}  // namespace multicenter
