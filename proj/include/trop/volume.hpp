#pragma once

#include "trop/rational.hpp"

namespace trop {

/// Euclidean volume of conv(points) in R^n for n <= 3 (length / area /
/// volume). Returns 0 when the points span less than n dimensions.
/// Exact throughout: 2D uses a monotone-chain hull, 3D an incremental hull
/// with exact orientation predicates.
Rat polytope_volume(std::vector<RatVec> points, int n);

}  // namespace trop
