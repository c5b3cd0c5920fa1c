#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "texpic/diagnostic.hpp"
#include "texpic/scene.hpp"

namespace texpic {

struct ImportOptions {
  double scale = 1.0;  // SVG user units per picture unit multiplier
  bool strict = false; // throw on unsupported content instead of skipping it
};

struct ImportResult {
  Scene scene;
  std::vector<Diagnostic> diagnostics;  // W03 for every skipped element
};

// Imports line, rect, circle, text and path (M/L/Q/Z) elements from an SVG
// document, mirroring the top-left-origin SVG frame into picture space.
// A line with marker-end becomes an arrowed segment. Throws
// Error(MalformedInput) for unreadable documents and, in strict mode,
// Error(UnsupportedFeature) for anything that would be skipped.
ImportResult import_svg(std::string_view text, const ImportOptions& opts = {});

using PathPiece = std::variant<Segment, QuadBezier>;

// Path data with absolute and relative M, L, Q and Z commands (implicit
// repetition allowed) in SVG coordinates. Any other command letter throws
// Error(MalformedInput).
std::vector<PathPiece> parse_path_data(std::string_view d);

}  // namespace texpic
