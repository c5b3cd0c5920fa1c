#include "texpic/emitter.hpp"

#include <charconv>
#include <cmath>

#include "texpic/error.hpp"
#include "texpic/slope.hpp"

namespace texpic {
namespace {

Point round_point(Point p) {
  return {static_cast<double>(round_coord(p.x)), static_cast<double>(round_coord(p.y))};
}

bool is_integral(double v) { return std::fabs(v - std::nearbyint(v)) <= 1e-9; }

QbezierCmd straight_qbezier(Point p0, Point p1) {
  const Point a = round_point(p0);
  const Point b = round_point(p1);
  return {a, round_point(midpoint(a, b)), b};
}

// \put(p0){\line(a,b){len}} or \vector, when the stroke is representable.
std::optional<PutCmd> native_stroke(Point p0, Point p1, SlopeKind kind, const EmitOptions& opts) {
  if (!is_integral(p0.x) || !is_integral(p0.y) || !is_integral(p1.x) || !is_integral(p1.y)) {
    return std::nullopt;
  }
  const Point a = round_point(p0);
  const Point b = round_point(p1);
  if (a == b) return std::nullopt;
  const Vec2 d = b - a;
  const RationalSlope rs = rationalize_slope(d.x, d.y, kind);
  if (rs.angular_error > opts.exactness_tolerance) return std::nullopt;
  const auto exact = reduce_direction(d.x, d.y);
  if (!exact || *exact != rs.pair) return std::nullopt;
  const long long len = line_length_arg(a, b, rs.pair);
  if (len < 1) return std::nullopt;
  const double pa = rs.pair.a, pb = rs.pair.b, pl = static_cast<double>(len);
  if (kind == SlopeKind::Line) return PutCmd{a, LineCmd{pa, pb, pl}};
  return PutCmd{a, VectorCmd{pa, pb, pl}};
}

void emit_stroke(const Segment& s, const EmitOptions& opts, std::vector<PictureCommand>& out) {
  if (opts.line_mode == LineMode::NativeWhenExact) {
    const SlopeKind kind = s.arrow ? SlopeKind::Vector : SlopeKind::Line;
    if (auto put = native_stroke(s.p0, s.p1, kind, opts)) {
      out.emplace_back(std::move(*put));
      return;
    }
  }
  out.emplace_back(straight_qbezier(s.p0, s.p1));
  if (!s.arrow) return;
  const auto [left, right] = arrowhead(s.p1, s.p1 - s.p0, opts.arrow_style);
  out.emplace_back(straight_qbezier(left.p0, left.p1));
  out.emplace_back(straight_qbezier(right.p0, right.p1));
}

void check_normalized(const Primitive& prim) {
  bool negative = false;
  const auto check = [&](Point p) { negative = negative || p.x < -1e-9 || p.y < -1e-9; };
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Segment>) {
          check(p.p0);
          check(p.p1);
        } else if constexpr (std::is_same_v<T, Rectangle>) {
          check(p.corner);
        } else if constexpr (std::is_same_v<T, Circle>) {
          check({p.center.x - 0.5 * p.diameter, p.center.y - 0.5 * p.diameter});
        } else if constexpr (std::is_same_v<T, QuadBezier>) {
          check(p.p0);
          check(p.c);
          check(p.p1);
        } else {
          check(p.anchor);
        }
      },
      prim);
  if (negative) {
    throw Error(ErrorCode::NotNormalized, "primitive has coordinates below the picture origin");
  }
}

void append_number(std::string& out, double v) { out += format_number(v); }

void append_pair(std::string& out, Point p) {
  out += '(';
  append_number(out, p.x);
  out += ',';
  append_number(out, p.y);
  out += ')';
}

}  // namespace

long long round_coord(double v) { return std::llround(v); }

std::string format_number(double v) {
  if (v == 0.0) return "0";
  if (std::fabs(v) < 1e15 && v == std::nearbyint(v)) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_command(const PictureCommand& cmd) {
  std::string out;
  if (const auto* q = std::get_if<QbezierCmd>(&cmd)) {
    out = "\\qbezier";
    append_pair(out, q->p0);
    append_pair(out, q->c);
    append_pair(out, q->p1);
    return out;
  }
  const auto& put = std::get<PutCmd>(cmd);
  out = "\\put";
  append_pair(out, put.at);
  out += '{';
  std::visit(
      [&](const auto& body) {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, LineCmd> || std::is_same_v<T, VectorCmd>) {
          out += std::is_same_v<T, LineCmd> ? "\\line" : "\\vector";
          append_pair(out, {body.a, body.b});
          out += '{';
          append_number(out, body.length);
          out += '}';
        } else if constexpr (std::is_same_v<T, CircleCmd>) {
          out += body.filled ? "\\circle*{" : "\\circle{";
          append_number(out, body.diameter);
          out += '}';
        } else {
          out += body.text;
        }
      },
      put.body);
  out += '}';
  return out;
}

std::vector<PictureCommand> emit_primitive(const Primitive& prim, const EmitOptions& opts) {
  if (opts.exactness_tolerance < 0.0) throw Error(ErrorCode::Domain, "negative exactness tolerance");
  if (opts.strict) check_normalized(prim);
  std::vector<PictureCommand> out;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Segment>) {
          emit_stroke(p, opts, out);
        } else if constexpr (std::is_same_v<T, Rectangle>) {
          for (const Segment& edge : rect_as_segments(p)) emit_stroke(edge, opts, out);
        } else if constexpr (std::is_same_v<T, Circle>) {
          if (opts.circle_quads) {
            for (const QuadBezier& arc : circle_as_quads(p, *opts.circle_quads)) {
              out.emplace_back(QbezierCmd{round_point(arc.p0), round_point(arc.c), round_point(arc.p1)});
            }
          } else {
            const double d = static_cast<double>(std::max(1LL, round_coord(p.diameter)));
            out.emplace_back(PutCmd{round_point(p.center), CircleCmd{d, p.filled}});
          }
        } else if constexpr (std::is_same_v<T, QuadBezier>) {
          out.emplace_back(QbezierCmd{round_point(p.p0), round_point(p.c), round_point(p.p1)});
        } else {
          out.emplace_back(PutCmd{round_point(p.anchor), TextCmd{p.text}});
        }
      },
      prim);
  return out;
}

std::string format_picture(long long width, long long height,
                           const std::vector<PictureCommand>& commands,
                           const std::optional<std::string>& unitlength) {
  std::string out;
  if (unitlength) out += "\\setlength{\\unitlength}{" + *unitlength + "}\n";
  out += "\\begin{picture}(" + std::to_string(width) + "," + std::to_string(height) + ")\n";
  for (const auto& cmd : commands) {
    out += format_command(cmd);
    out += '\n';
  }
  out += "\\end{picture}\n";
  return out;
}

std::string emit_scene(const Scene& scene, const EmitOptions& opts) {
  if (scene.empty()) throw Error(ErrorCode::EmptyScene, "nothing to emit");
  const NormalizedScene norm = normalize(scene);
  std::vector<PictureCommand> commands;
  for (const auto& prim : norm.scene) {
    auto part = emit_primitive(prim, opts);
    commands.insert(commands.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
  }
  const auto w = static_cast<long long>(std::ceil(norm.width));
  const auto h = static_cast<long long>(std::ceil(norm.height));
  return format_picture(w, h, commands, opts.unitlength);
}

}  // namespace texpic
