#pragma once

#include <span>
#include <string>
#include <vector>

#include "texpic/curves.hpp"
#include "texpic/emitter.hpp"
#include "texpic/picture.hpp"
#include "texpic/scene.hpp"

namespace texpic {

// Segments become 2-point polylines (plus two barbs when arrowed),
// rectangles 4 edges, circles closed policy.circle_segments-gons, Bezier
// curves flatten_quad samples and labels single anchor points.
std::vector<Polyline> flatten_scene(const Scene& scene, const FlattenPolicy& policy = {},
                                    const ArrowStyle& style = {});

// The geometry a picture document draws, in the same frame doc_to_scene
// uses (origin argument removed). \vector heads are drawn with `style`.
std::vector<Polyline> flatten_doc(const PictureDoc& doc, const FlattenPolicy& policy = {},
                                  const ArrowStyle& style = {});

// Every polyline vertex plus extra points so no gap along an edge exceeds
// spacing.
std::vector<Point> resample(std::span<const Polyline> lines, double spacing);

// Symmetric Hausdorff distance between the resampled point sets.
// Throws Error(EmptyGeometry) if either side has no points.
double hausdorff(std::span<const Polyline> a, std::span<const Polyline> b, double spacing = 0.5);

// SVG 1.1 preview, one element per primitive, y mirrored about
// canvas_height. Throws Error(EmptyScene).
std::string render_preview(const Scene& scene, double canvas_height);

// Distance between the normalized scene and what its emitted picture code
// draws when parsed back.
double roundtrip_distance(const Scene& scene, const EmitOptions& emit = {},
                          const FlattenPolicy& policy = {}, double spacing = 0.5);

}  // namespace texpic
