#pragma once

#include <string>

#include "excseq/nc_tree.hpp"

namespace excseq {

// Chord diagram as an SVG 1.1 document: points at angle 90 + k*360/(n+1)
// degrees counterclockwise on the unit circle (point 0 on top), chords as
// straight segments, labels outside the circle.  All coordinates are
// formatted through a fixed two-decimal integer formatter, so the output is
// byte-identical for identical input.  Throws std::invalid_argument for a
// chord set that is not a non-crossing spanning tree.
std::string render_svg(const NCTree& tree);

}  // namespace excseq
