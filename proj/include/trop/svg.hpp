#pragma once

#include <string>

#include "trop/theorem_lab.hpp"

namespace trop {

/// Deterministic SVG rendering of a planar instance (n = 2): hypersurface
/// cells as colored polylines clipped to the padded bounding box of all
/// vertices, intersection cover emphasized, stable points as filled circles.
/// Points lying on all surfaces are white-filled. For k > 2 the points are
/// the stable intersections of every 2-subset of the curves.
/// Byte output depends only on (instance, seeds).
std::string render_plot(const Instance& instance, const std::vector<long>& seeds);

}  // namespace trop
