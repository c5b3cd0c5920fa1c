#pragma once

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "texpic/geometry.hpp"
#include "texpic/scene.hpp"

namespace texpic {

struct Polyline {
  std::vector<Point> points;
};

struct FlattenPolicy {
  double t_step = 0.01;
  int circle_segments = 100;
};

// Throws Error(Domain) unless 0 < t_step <= 1 and circle_segments >= 8.
void validate(const FlattenPolicy& policy);

// Defaults reproduce the (-7, +-3) barb offsets of conventional picture
// arrows on a horizontal shaft.
struct ArrowStyle {
  double barb_length = std::sqrt(58.0);
  double barb_half_angle = std::atan(3.0 / 7.0);
};

void validate(const ArrowStyle& style);

// C(n,i) t^i (1-t)^(n-i). Throws Error(Domain) outside 0<=i<=n, 0<=t<=1.
double bernstein(int i, int n, double t);

// (1-t)^2 p0 + 2t(1-t) c + t^2 p1.
Point quad_point(Point p0, Point c, Point p1, double t);

// Samples t = 0, step, 2 step, ... and always finishes with t = 1 exactly,
// giving ceil(1/step) + 1 points.
Polyline flatten_quad(Point p0, Point c, Point p1, const FlattenPolicy& policy = {});

std::size_t flatten_sample_count(const FlattenPolicy& policy);

// Straight segment as a quadratic with its control at the midpoint.
QuadBezier segment_as_quad(Point p0, Point p1);

// The two barbs of an arrowhead at tip; the first is rotated clockwise
// from the reversed direction, the second counterclockwise.
// Throws Error(ZeroDirection) for a zero direction.
std::pair<Segment, Segment> arrowhead(Point tip, Vec2 direction, const ArrowStyle& style = {});

// Bottom, right, top, left: counterclockwise from the corner.
std::array<Segment, 4> rect_as_segments(const Rectangle& r);

// n_arcs quadratic arcs with on-circle endpoints at angles 2 pi k / n_arcs
// and controls at the tangent intersections.
std::vector<QuadBezier> circle_as_quads(const Circle& c, int n_arcs);

// Upper bound on radial deviation of circle_as_quads: r (1/cos(pi/n) - 1).
double circle_quads_error_bound(double radius, int n_arcs);

Polyline circle_polygon(const Circle& c, int segments);

}  // namespace texpic
