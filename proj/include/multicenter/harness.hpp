#pragma once

#include <filesystem>

#include "multicenter/scenario.hpp"

namespace multicenter {

struct RunArtifacts {
  Trajectory trajectory;
  std::filesystem::path summary_path;
  std::filesystem::path csv_path;                 // empty when csv disabled
  std::vector<std::filesystem::path> svg_paths;
};

// Trajectory table: one row per (step, generator) with columns
// t,i,x,y,H_DC,H_SP,speed, each number printed with 12 significant digits.
std::string trajectory_csv(const Trajectory& trajectory);

// Atomic write: the content lands under `path` via a temp-file rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// Integrates the scenario and writes the requested artifacts into out_dir:
// always a summary.json; trajectory.csv and SVG frames (initial, final,
// overlay, plus every k-th step when configured) per the output spec.
// `force_svg` requests the three standard frames regardless of the spec.
RunArtifacts run_scenario(const Scenario& scenario, const std::filesystem::path& out_dir,
                          bool force_svg = false);

}  // namespace multicenter
