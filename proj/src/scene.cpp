#include "texpic/scene.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "texpic/error.hpp"

namespace texpic {
namespace {

constexpr int kGridBits = 30;

double snap_with(double v, int bits) {
  return std::ldexp(std::nearbyint(std::ldexp(v, bits)), -bits);
}

void check_coordinate(double v, std::string_view what) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::InvalidPrimitive, std::string(what) + " is not finite");
  }
  if (std::fabs(v) > kMaxCoordinate) {
    throw Error(ErrorCode::InvalidPrimitive, std::string(what) + " exceeds the coordinate range");
  }
}

void check_point(Point p, std::string_view what) {
  check_coordinate(p.x, what);
  check_coordinate(p.y, what);
}

Point snap(Point p) { return {snap_to_grid(p.x), snap_to_grid(p.y)}; }

// Diameters sit on a grid twice as coarse so that center +- radius stays
// on the coordinate grid.
double snap_diameter(double d) { return snap_with(d, kGridBits - 1); }

template <class F>
Primitive map_points(const Primitive& prim, F&& f) {
  return std::visit(
      [&](const auto& p) -> Primitive {
        using T = std::decay_t<decltype(p)>;
        T out = p;
        if constexpr (std::is_same_v<T, Segment>) {
          out.p0 = f(p.p0);
          out.p1 = f(p.p1);
        } else if constexpr (std::is_same_v<T, Rectangle>) {
          out.corner = f(p.corner);
        } else if constexpr (std::is_same_v<T, Circle>) {
          out.center = f(p.center);
        } else if constexpr (std::is_same_v<T, QuadBezier>) {
          out.p0 = f(p.p0);
          out.c = f(p.c);
          out.p1 = f(p.p1);
        } else {
          out.anchor = f(p.anchor);
        }
        return out;
      },
      prim);
}

struct BoxAccumulator {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(Point p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
};

}  // namespace

double snap_to_grid(double v) { return snap_with(v, kGridBits); }

bool is_valid_label_text(std::string_view text) {
  if (text.empty()) return false;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '\\') {
      ++i;  // escaped character, including \{ and \}
      continue;
    }
    if (ch == '{') {
      if (++depth > 1) return false;
    } else if (ch == '}') {
      if (--depth < 0) return false;
    } else if (ch == '\n' || ch == '\r') {
      return false;
    }
  }
  // a trailing lone backslash would escape the closing brace of \put{...}
  if (text.back() == '\\' && (text.size() < 2 || text[text.size() - 2] != '\\')) return false;
  return depth == 0;
}

void validate(const Primitive& prim) {
  std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Segment>) {
          check_point(p.p0, "segment start");
          check_point(p.p1, "segment end");
          if (p.arrow && p.p0 == p.p1) {
            throw Error(ErrorCode::InvalidPrimitive, "vector needs distinct endpoints");
          }
        } else if constexpr (std::is_same_v<T, Rectangle>) {
          check_point(p.corner, "rectangle corner");
          check_coordinate(p.width, "rectangle width");
          check_coordinate(p.height, "rectangle height");
          if (p.width < 0.0 || p.height < 0.0) {
            throw Error(ErrorCode::InvalidPrimitive, "rectangle size must be non-negative");
          }
        } else if constexpr (std::is_same_v<T, Circle>) {
          check_point(p.center, "circle center");
          check_coordinate(p.diameter, "circle diameter");
          if (!(p.diameter > 0.0)) {
            throw Error(ErrorCode::InvalidPrimitive, "circle diameter must be positive");
          }
        } else if constexpr (std::is_same_v<T, QuadBezier>) {
          check_point(p.p0, "qbezier start");
          check_point(p.c, "qbezier control");
          check_point(p.p1, "qbezier end");
        } else {
          check_point(p.anchor, "label anchor");
          if (!is_valid_label_text(p.text)) {
            throw Error(ErrorCode::InvalidPrimitive, "invalid label text '" + p.text + "'");
          }
        }
      },
      prim);
}

Scene::Scene(std::vector<Primitive> primitives) {
  primitives_.reserve(primitives.size());
  for (auto& p : primitives) add(std::move(p));
}

void Scene::add(Primitive p) {
  validate(p);
  Primitive snapped = map_points(p, snap);
  if (auto* r = std::get_if<Rectangle>(&snapped)) {
    r->width = snap_to_grid(r->width);
    r->height = snap_to_grid(r->height);
  } else if (auto* c = std::get_if<Circle>(&snapped)) {
    c->diameter = snap_diameter(c->diameter);
    if (c->diameter <= 0.0) c->diameter = std::ldexp(1.0, -(kGridBits - 1));
  } else if (auto* s = std::get_if<Segment>(&snapped)) {
    if (s->arrow && s->p0 == s->p1) {
      throw Error(ErrorCode::InvalidPrimitive, "vector collapses to a point on the scene grid");
    }
  }
  primitives_.push_back(std::move(snapped));
}

BoundingBox scene_bbox(const Scene& scene) {
  if (scene.empty()) throw Error(ErrorCode::EmptyScene, "scene has no primitives");
  BoxAccumulator box;
  for (const auto& prim : scene) {
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, Segment>) {
            box.add(p.p0);
            box.add(p.p1);
          } else if constexpr (std::is_same_v<T, Rectangle>) {
            box.add(p.corner);
            box.add({p.corner.x + p.width, p.corner.y + p.height});
          } else if constexpr (std::is_same_v<T, Circle>) {
            const double r = 0.5 * p.diameter;
            box.add({p.center.x - r, p.center.y - r});
            box.add({p.center.x + r, p.center.y + r});
          } else if constexpr (std::is_same_v<T, QuadBezier>) {
            box.add(p.p0);
            box.add(p.c);
            box.add(p.p1);
          } else {
            box.add(p.anchor);
          }
        },
        prim);
  }
  return {{box.min_x, box.min_y}, {box.max_x, box.max_y}};
}

Scene translate(const Scene& scene, Vec2 offset) {
  const Vec2 step{snap_to_grid(offset.x), snap_to_grid(offset.y)};
  Scene out;
  for (const auto& prim : scene) {
    out.add(map_points(prim, [&](Point p) { return p + step; }));
  }
  return out;
}

NormalizedScene normalize(const Scene& scene) {
  const BoundingBox box = scene_bbox(scene);
  NormalizedScene out;
  out.scene = translate(scene, {-box.min.x, -box.min.y});
  out.width = box.width();
  out.height = box.height();
  return out;
}

Scene flip_vertical(const Scene& scene, double canv_top) {
  if (!std::isfinite(canv_top) || std::fabs(canv_top) > kMaxCoordinate) {
    throw Error(ErrorCode::Domain, "flip height must be finite and within the coordinate range");
  }
  const double top = snap_to_grid(canv_top);
  const auto mirror = [top](Point p) { return Point{p.x, top - p.y}; };
  Scene out;
  for (const auto& prim : scene) {
    Primitive flipped = map_points(prim, mirror);
    if (auto* r = std::get_if<Rectangle>(&flipped)) {
      r->corner.y -= r->height;
    }
    out.add(std::move(flipped));
  }
  return out;
}

Scene from_canvas(const Scene& screen, const CanvasFrame& frame) {
  if (!(frame.canv_top >= 0.0)) {
    throw Error(ErrorCode::Domain, "canvas top offset must be non-negative");
  }
  return flip_vertical(translate(screen, {-frame.canv_left, 0.0}), frame.canv_top);
}

std::string_view kind_name(const Primitive& p) {
  static constexpr std::string_view names[] = {"segment", "rect", "circle", "qbezier", "label"};
  return names[p.index()];
}

}  // namespace texpic
