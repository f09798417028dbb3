#pragma once

#include <string>
#include <vector>

#include "riesz/centers.hpp"
#include "riesz/geometry.hpp"

namespace riesz {

/// Renders the body outline, the unfolded-region polygon, the center
/// trajectory polyline, and min-max / max-min markers into a standalone SVG.
std::string trajectory_svg(const Body& body, const UnfoldedRegion& uf,
                           const std::vector<Vec2>& path, const ExtremalBall& minmax,
                           const std::vector<ExtremalBall>& maxmin);

}  // namespace riesz
