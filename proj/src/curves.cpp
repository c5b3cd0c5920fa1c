#include "texpic/curves.hpp"

#include <numbers>
#include <string>

#include "texpic/error.hpp"

namespace texpic {
namespace {

void check_unit_interval(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::Domain, "curve parameter " + std::to_string(t) + " outside [0,1]");
  }
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

}  // namespace

void validate(const FlattenPolicy& policy) {
  if (!(policy.t_step > 0.0 && policy.t_step <= 1.0)) {
    throw Error(ErrorCode::Domain, "t_step must lie in (0,1]");
  }
  if (policy.circle_segments < 8) {
    throw Error(ErrorCode::Domain, "circle_segments must be at least 8");
  }
}

void validate(const ArrowStyle& style) {
  if (!(style.barb_length > 0.0) || !std::isfinite(style.barb_length)) {
    throw Error(ErrorCode::Domain, "barb_length must be positive");
  }
  if (!(style.barb_half_angle > 0.0 && style.barb_half_angle < std::numbers::pi / 2)) {
    throw Error(ErrorCode::Domain, "barb_half_angle must lie in (0, pi/2)");
  }
}

double bernstein(int i, int n, double t) {
  if (n < 0 || i < 0 || i > n) {
    throw Error(ErrorCode::Domain, "bernstein index " + std::to_string(i) + " outside [0," +
                                       std::to_string(n) + "]");
  }
  check_unit_interval(t);
  return binomial(n, i) * std::pow(t, i) * std::pow(1.0 - t, n - i);
}

Point quad_point(Point p0, Point c, Point p1, double t) {
  check_unit_interval(t);
  const double u = 1.0 - t;
  const double w0 = u * u;
  const double w1 = 2.0 * t * u;
  const double w2 = t * t;
  return {w0 * p0.x + w1 * c.x + w2 * p1.x, w0 * p0.y + w1 * c.y + w2 * p1.y};
}

std::size_t flatten_sample_count(const FlattenPolicy& policy) {
  validate(policy);
  // 1/0.01 evaluates to 100 within an ulp; don't let that noise add a sample
  const double steps = std::ceil(1.0 / policy.t_step - 1e-9);
  return static_cast<std::size_t>(std::max(1.0, steps)) + 1;
}

Polyline flatten_quad(Point p0, Point c, Point p1, const FlattenPolicy& policy) {
  const std::size_t count = flatten_sample_count(policy);
  Polyline out;
  out.points.reserve(count);
  for (std::size_t k = 0; k + 1 < count; ++k) {
    out.points.push_back(quad_point(p0, c, p1, static_cast<double>(k) * policy.t_step));
  }
  out.points.push_back(p1);
  out.points.front() = p0;
  return out;
}

QuadBezier segment_as_quad(Point p0, Point p1) { return {p0, midpoint(p0, p1), p1}; }

std::pair<Segment, Segment> arrowhead(Point tip, Vec2 direction, const ArrowStyle& style) {
  validate(style);
  const double len = norm(direction);
  if (len == 0.0) throw Error(ErrorCode::ZeroDirection, "arrowhead needs a direction");
  const Vec2 back{-direction.x / len, -direction.y / len};
  const double cs = std::cos(style.barb_half_angle);
  const double sn = std::sin(style.barb_half_angle);
  const Vec2 cw{back.x * cs + back.y * sn, -back.x * sn + back.y * cs};
  const Vec2 ccw{back.x * cs - back.y * sn, back.x * sn + back.y * cs};
  return {Segment{tip, tip + style.barb_length * cw, false},
          Segment{tip, tip + style.barb_length * ccw, false}};
}

std::array<Segment, 4> rect_as_segments(const Rectangle& r) {
  const Point a = r.corner;
  const Point b{a.x + r.width, a.y};
  const Point c{a.x + r.width, a.y + r.height};
  const Point d{a.x, a.y + r.height};
  return {Segment{a, b}, Segment{b, c}, Segment{c, d}, Segment{d, a}};
}

std::vector<QuadBezier> circle_as_quads(const Circle& c, int n_arcs) {
  if (n_arcs < 4) throw Error(ErrorCode::Domain, "circle lowering needs at least 4 arcs");
  if (!(c.diameter > 0.0)) throw Error(ErrorCode::Domain, "circle diameter must be positive");
  const double r = 0.5 * c.diameter;
  const double step = 2.0 * std::numbers::pi / n_arcs;
  const double reach = r / std::cos(0.5 * step);
  const auto on_circle = [&](int k) {
    if (k == n_arcs) k = 0;
    const double a = step * k;
    return Point{c.center.x + r * std::cos(a), c.center.y + r * std::sin(a)};
  };
  std::vector<QuadBezier> out;
  out.reserve(static_cast<std::size_t>(n_arcs));
  for (int k = 0; k < n_arcs; ++k) {
    const double mid = step * (k + 0.5);
    const Point ctrl{c.center.x + reach * std::cos(mid), c.center.y + reach * std::sin(mid)};
    out.push_back({on_circle(k), ctrl, on_circle(k + 1)});
  }
  return out;
}

double circle_quads_error_bound(double radius, int n_arcs) {
  return radius * (1.0 / std::cos(std::numbers::pi / n_arcs) - 1.0);
}

Polyline circle_polygon(const Circle& c, int segments) {
  const double r = 0.5 * c.diameter;
  Polyline out;
  out.points.reserve(static_cast<std::size_t>(segments) + 1);
  for (int k = 0; k <= segments; ++k) {
    const double a = 2.0 * std::numbers::pi * (k == segments ? 0 : k) / segments;
    out.points.push_back({c.center.x + r * std::cos(a), c.center.y + r * std::sin(a)});
  }
  return out;
}

}  // namespace texpic
