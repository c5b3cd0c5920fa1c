#include "texpic/fidelity.hpp"

#include <cmath>

#include "texpic/error.hpp"
#include "texpic/hausdorff_kernels.hpp"
#include "texpic/parser.hpp"

namespace texpic {
namespace {

void add_stroke(std::vector<Polyline>& out, Point a, Point b) { out.push_back({{a, b}}); }

void add_arrow(std::vector<Polyline>& out, Point tail, Point tip, const ArrowStyle& style) {
  add_stroke(out, tail, tip);
  if (tail == tip) return;
  const auto [left, right] = arrowhead(tip, tip - tail, style);
  add_stroke(out, left.p0, left.p1);
  add_stroke(out, right.p0, right.p1);
}

std::string num(double v) { return format_number(v); }

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

Vec2 put_offset(double a, double b, double len) {
  if (a == 0.0) return {0.0, b > 0.0 ? len : (b < 0.0 ? -len : 0.0)};
  const double dx = a > 0.0 ? len : -len;
  return {dx, dx * b / a};
}

}  // namespace

std::vector<Polyline> flatten_scene(const Scene& scene, const FlattenPolicy& policy,
                                    const ArrowStyle& style) {
  validate(policy);
  std::vector<Polyline> out;
  for (const auto& prim : scene) {
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, Segment>) {
            if (p.arrow) {
              add_arrow(out, p.p0, p.p1, style);
            } else {
              add_stroke(out, p.p0, p.p1);
            }
          } else if constexpr (std::is_same_v<T, Rectangle>) {
            for (const Segment& e : rect_as_segments(p)) add_stroke(out, e.p0, e.p1);
          } else if constexpr (std::is_same_v<T, Circle>) {
            out.push_back(circle_polygon(p, policy.circle_segments));
          } else if constexpr (std::is_same_v<T, QuadBezier>) {
            out.push_back(flatten_quad(p.p0, p.c, p.p1, policy));
          } else {
            out.push_back({{p.anchor}});
          }
        },
        prim);
  }
  return out;
}

std::vector<Polyline> flatten_doc(const PictureDoc& doc, const FlattenPolicy& policy,
                                  const ArrowStyle& style) {
  validate(policy);
  const Vec2 shift{-doc.origin.x, -doc.origin.y};
  std::vector<Polyline> out;
  for (const auto& [cmd, span] : doc.commands) {
    if (const auto* q = std::get_if<QbezierCmd>(&cmd)) {
      out.push_back(flatten_quad(q->p0 + shift, q->c + shift, q->p1 + shift, policy));
      continue;
    }
    const auto& put = std::get<PutCmd>(cmd);
    const Point at = put.at + shift;
    std::visit(
        [&](const auto& body) {
          using T = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<T, LineCmd>) {
            add_stroke(out, at, at + put_offset(body.a, body.b, body.length));
          } else if constexpr (std::is_same_v<T, VectorCmd>) {
            add_arrow(out, at, at + put_offset(body.a, body.b, body.length), style);
          } else if constexpr (std::is_same_v<T, CircleCmd>) {
            out.push_back(circle_polygon(Circle{at, body.diameter, body.filled}, policy.circle_segments));
          } else {
            out.push_back({{at}});
          }
        },
        put.body);
  }
  return out;
}

std::vector<Point> resample(std::span<const Polyline> lines, double spacing) {
  if (!(spacing > 0.0)) throw Error(ErrorCode::Domain, "sample spacing must be positive");
  std::vector<Point> out;
  for (const Polyline& line : lines) {
    const auto& pts = line.points;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const double len = distance(pts[i], pts[i + 1]);
      const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil(len / spacing)));
      for (std::size_t k = 0; k < pieces; ++k) {
        out.push_back(lerp(pts[i], pts[i + 1], static_cast<double>(k) / static_cast<double>(pieces)));
      }
    }
    if (!pts.empty()) out.push_back(pts.back());
  }
  return out;
}

double hausdorff(std::span<const Polyline> a, std::span<const Polyline> b, double spacing) {
  const std::vector<Point> pa = resample(a, spacing);
  const std::vector<Point> pb = resample(b, spacing);
  if (pa.empty() || pb.empty()) throw Error(ErrorCode::EmptyGeometry, "hausdorff needs points on both sides");
  return std::max(kernels::directed_hausdorff_parallel(pa, pb),
                  kernels::directed_hausdorff_parallel(pb, pa));
}

std::string render_preview(const Scene& scene, double canvas_height) {
  const BoundingBox box = scene_bbox(scene);
  if (!(canvas_height >= box.height()) || !std::isfinite(canvas_height)) {
    throw Error(ErrorCode::Domain, "canvas height is smaller than the scene");
  }
  const double top = snap_to_grid(canvas_height);
  const double width = std::max(0.0, box.max.x);
  const auto y = [top](double v) { return num(top - v); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
         "\" height=\"" + num(top) + "\" viewBox=\"0 0 " + num(width) + " " + num(top) + "\">\n";
  out += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
  for (const auto& prim : scene) {
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, Segment>) {
            out += "<line x1=\"" + num(p.p0.x) + "\" y1=\"" + y(p.p0.y) + "\" x2=\"" + num(p.p1.x) +
                   "\" y2=\"" + y(p.p1.y) + "\" stroke=\"black\"";
            if (p.arrow) out += " marker-end=\"url(#arrow)\"";
            out += "/>\n";
          } else if constexpr (std::is_same_v<T, Rectangle>) {
            out += "<rect x=\"" + num(p.corner.x) + "\" y=\"" + y(p.corner.y + p.height) +
                   "\" width=\"" + num(p.width) + "\" height=\"" + num(p.height) +
                   "\" fill=\"none\" stroke=\"black\"/>\n";
          } else if constexpr (std::is_same_v<T, Circle>) {
            out += "<circle cx=\"" + num(p.center.x) + "\" cy=\"" + y(p.center.y) + "\" r=\"" +
                   num(0.5 * p.diameter) + "\" fill=\"" + (p.filled ? "black" : "none") +
                   "\" stroke=\"black\"/>\n";
          } else if constexpr (std::is_same_v<T, QuadBezier>) {
            out += "<path d=\"M " + num(p.p0.x) + " " + y(p.p0.y) + " Q " + num(p.c.x) + " " +
                   y(p.c.y) + " " + num(p.p1.x) + " " + y(p.p1.y) +
                   "\" fill=\"none\" stroke=\"black\"/>\n";
          } else {
            out += "<text x=\"" + num(p.anchor.x) + "\" y=\"" + y(p.anchor.y) + "\">" +
                   escape_xml(p.text) + "</text>\n";
          }
        },
        prim);
  }
  out += "</svg>\n";
  return out;
}

double roundtrip_distance(const Scene& scene, const EmitOptions& emit, const FlattenPolicy& policy,
                          double spacing) {
  const NormalizedScene norm = normalize(scene);
  const std::string code = emit_scene(scene, emit);
  const ParseResult parsed = parse_picture(code);
  if (has_errors(parsed.diagnostics)) {
    throw Error(ErrorCode::LintFailed, "emitted picture code does not parse cleanly");
  }
  const Scene back = doc_to_scene(parsed.doc, {true, emit.arrow_style});
  const auto original = flatten_scene(norm.scene, policy, emit.arrow_style);
  const auto drawn = flatten_scene(back, policy, emit.arrow_style);
  return hausdorff(original, drawn, spacing);
}

}  // namespace texpic
