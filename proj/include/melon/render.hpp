#pragma once

#include <string>

#include "melon/paths.hpp"
#include "melon/serialize.hpp"

namespace melon {

enum class RenderStyle { Ascii, Svg };

/// Lattice-path picture of a watermelon. ASCII legend: o start C_i,
/// d shifted start D_i (deviation, drawn when it lies on its path),
/// * end B_i, + path vertex, . free lattice point.
std::string render_watermelon(const Watermelon& w, RenderStyle style);

/// ASCII: the heights matrix. SVG: isometric stack of unit cubes inside the
/// box outline.
std::string render_plane_partition(const BoxedPlanePartition& box, RenderStyle style);

}  // namespace melon
