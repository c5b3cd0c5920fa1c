#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "texpic/geometry.hpp"

namespace texpic {

// A straight stroke. arrow=true is a vector: shaft from p0 with the head at p1.
struct Segment {
  Point p0;
  Point p1;
  bool arrow = false;

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Axis-aligned; corner is the bottom-left vertex.
struct Rectangle {
  Point corner;
  double width = 0.0;
  double height = 0.0;

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

struct Circle {
  Point center;
  double diameter = 0.0;
  bool filled = false;

  friend bool operator==(const Circle&, const Circle&) = default;
};

struct QuadBezier {
  Point p0;
  Point c;
  Point p1;

  friend bool operator==(const QuadBezier&, const QuadBezier&) = default;
};

struct Label {
  Point anchor;
  std::string text;

  friend bool operator==(const Label&, const Label&) = default;
};

using Primitive = std::variant<Segment, Rectangle, Circle, QuadBezier, Label>;

// Screen-space offsets of a top-left-origin drawing canvas.
struct CanvasFrame {
  double canv_left = 0.0;
  double canv_top = 0.0;
};

// Coordinates inside a Scene live on a fixed binary grid (multiples of
// kGridStep, magnitude at most kMaxCoordinate). On that grid every
// translation and mirror the scene applies is exact in double arithmetic,
// so flip_vertical is a true involution and normalize is idempotent.
inline constexpr double kGridStep = 1.0 / 1073741824.0;  // 2^-30
inline constexpr double kMaxCoordinate = 4194304.0;      // 2^22

double snap_to_grid(double v);

// Label text must be non-empty, keep braces balanced (\{ and \} are
// escapes) and nest at most one level deep.
bool is_valid_label_text(std::string_view text);

// Throws Error(InvalidPrimitive) if p violates its invariants.
void validate(const Primitive& p);

// Ordered, validated collection of primitives. Insertion order is the
// emission order and no transform ever reorders it.
class Scene {
 public:
  Scene() = default;
  explicit Scene(std::vector<Primitive> primitives);

  // Validates p and snaps its coordinates to the scene grid.
  void add(Primitive p);

  const std::vector<Primitive>& primitives() const { return primitives_; }
  std::size_t size() const { return primitives_.size(); }
  bool empty() const { return primitives_.empty(); }
  auto begin() const { return primitives_.begin(); }
  auto end() const { return primitives_.end(); }

  friend bool operator==(const Scene&, const Scene&) = default;

 private:
  std::vector<Primitive> primitives_;
};

// Tight box over anchor geometry: segment endpoints (no arrowhead barbs),
// rectangle corners, Bezier control hulls, circle extents, label anchors.
BoundingBox scene_bbox(const Scene& scene);

struct NormalizedScene {
  Scene scene;
  double width = 0.0;
  double height = 0.0;
};

// Translates so the bounding box starts at the origin.
NormalizedScene normalize(const Scene& scene);

Scene translate(const Scene& scene, Vec2 offset);

// (x, y) -> (x, canv_top - y). Rectangles keep their corner at the bottom.
Scene flip_vertical(const Scene& scene, double canv_top);

// Screen (top-left origin) to picture space, the one-shot ingestion step.
Scene from_canvas(const Scene& screen, const CanvasFrame& frame);

std::string_view kind_name(const Primitive& p);

}  // namespace texpic
