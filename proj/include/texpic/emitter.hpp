#pragma once

#include <optional>
#include <string>
#include <vector>

#include "texpic/curves.hpp"
#include "texpic/picture.hpp"
#include "texpic/scene.hpp"

namespace texpic {

enum class LineMode {
  // Every stroke becomes a degenerate \qbezier, any slope is exact.
  QbezierAlways,
  // \line / \vector when the stroke has integer endpoints and a slope the
  // picture environment can draw; \qbezier otherwise.
  NativeWhenExact,
};

struct EmitOptions {
  LineMode line_mode = LineMode::QbezierAlways;
  // nullopt draws circles with \circle; a value lowers them to that many
  // quadratic arcs.
  std::optional<int> circle_quads;
  ArrowStyle arrow_style;
  double exactness_tolerance = 1e-9;
  // Reject primitives with negative coordinates instead of emitting them.
  bool strict = false;
  // Prepends \setlength{\unitlength}{...} when set.
  std::optional<std::string> unitlength;
};

// Round half away from zero.
long long round_coord(double v);

// Expects picture-space input already translated to the origin.
std::vector<PictureCommand> emit_primitive(const Primitive& p, const EmitOptions& opts = {});

// \begin{picture}(W,H) ... \end{picture} with LF line endings. W and H are
// the ceiling of the normalized scene size. Throws Error(EmptyScene).
std::string emit_scene(const Scene& scene, const EmitOptions& opts = {});

std::string format_picture(long long width, long long height,
                           const std::vector<PictureCommand>& commands,
                           const std::optional<std::string>& unitlength = std::nullopt);

}  // namespace texpic
