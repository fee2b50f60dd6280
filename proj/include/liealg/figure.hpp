#pragma once

#include <string>
#include <vector>

#include "liealg/core.hpp"
#include "liealg/expm.hpp"

namespace liealg {

/// Layout of the orbit figure: the source point, its tangent A x, the
/// reference circle through x, and the learned locus e^{tA} x for t in [0, 2 pi].
struct FigureSpec {
  Vector source_point{1.0, 0.0};
  std::size_t orbit_grid_points = 360;
  bool include_true_orbit = true;
  int width = 720;
  int height = 720;
  double view_min = -1.5;
  double view_max = 1.5;

  void validate() const;
};

/// Everything drawn in the figure, in data coordinates.
struct FigureData {
  Vector source;
  Vector tangent_end;  ///< source + A source
  double true_radius = 0.0;
  std::vector<OrbitSample> learned_orbit;
};

/// Requires a 2 x 2 generator and a 2-dimensional source point.
FigureData build_figure(const Matrix& a, const FigureSpec& spec);

/// Standalone SVG with no external references.
std::string render_svg(const FigureData& fig, const FigureSpec& spec);

/// "t,p0,p1" header followed by one row per learned-orbit sample.
std::string orbit_csv(const FigureData& fig);

}  // namespace liealg
