#pragma once

#include <string>
#include <string_view>

#include "texpic/scene.hpp"

namespace texpic {

// Line-oriented scene files, one primitive per line:
//
//   segment x0 y0 x1 y1
//   vector  x0 y0 x1 y1
//   rect    x y w h
//   circle  cx cy d [filled]
//   qbezier x0 y0 cx cy x1 y1
//   label   x y text to end of line
//
// Blank lines and lines starting with '#' are ignored; '#' after the last
// numeric field of a non-label line starts a trailing comment. Throws
// Error(MalformedInput) naming the offending line.
Scene read_scene(std::string_view text);

std::string write_scene(const Scene& scene);

}  // namespace texpic
