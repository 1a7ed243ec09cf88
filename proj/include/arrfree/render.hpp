#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrfree/lattice.hpp"

namespace arrfree {

struct Viewport {
  double xmin = -2;
  double xmax = 2;
  double ymin = -2;
  double ymax = 2;
};

struct RenderOptions {
  /// Line sent to infinity: z = 0 when present, otherwise the first line.
  std::optional<int> infinity_line;
  /// Send a line outside the arrangement, avoiding every lattice point, to
  /// infinity instead. Overrides infinity_line.
  bool generic_chart = false;
  /// Defaults to the bounding box of the finite lattice points plus a margin.
  std::optional<Viewport> viewport;
  int width = 600;
};

struct Marker {
  int point = -1;  // index into LatticeData::points
  double x = 0;
  double y = 0;
  int mu = 0;
};

struct Segment {
  int line = -1;
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

/// The affine picture before serialization.
struct SvgScene {
  Viewport view;
  int infinity_line = -1;  // -1 for a generic chart
  Line infinity;
  std::vector<Segment> segments;
  std::vector<Marker> markers;
  /// Lattice points on the line at infinity.
  std::vector<int> points_at_infinity;
};

/// Throws NotDrawable for complex or parametric fields.
SvgScene build_scene(const Arrangement& a, const LatticeData& l, const RenderOptions& opts = {});
std::string render_svg(const Arrangement& a, const RenderOptions& opts = {});
std::string scene_to_svg(const SvgScene& s, int width);

}  // namespace arrfree
