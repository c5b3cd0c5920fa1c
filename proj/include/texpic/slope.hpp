#pragma once

#include <optional>
#include <vector>

#include "texpic/diagnostic.hpp"
#include "texpic/geometry.hpp"

namespace texpic {

// Direction argument of \line(a,b) / \vector(a,b): coprime, not both zero.
struct SlopePair {
  int a = 1;
  int b = 0;

  friend bool operator==(const SlopePair&, const SlopePair&) = default;
};

enum class SlopeKind { Line, Vector };

// LaTeX accepts |a|,|b| <= 6 for \line and <= 4 for \vector.
constexpr int slope_bound(SlopeKind kind) { return kind == SlopeKind::Line ? 6 : 4; }

// Reduces an integer-valued direction by its gcd, keeping signs. Returns
// nullopt when either component is farther than 1e-9 from an integer.
// Throws Error(ZeroDirection) for (0,0).
std::optional<SlopePair> reduce_direction(double dx, double dy);

struct RationalSlope {
  SlopePair pair;
  double angular_error = 0.0;  // radians
};

// Closest representable direction: coprime pair within the kind's bound
// minimising the angle to (dx,dy). Equal errors (within 1e-12) prefer the
// smaller |a|+|b|, then the larger a, then the larger b.
RationalSlope rationalize_slope(double dx, double dy, SlopeKind kind);

// Coprime pairs with |a|,|b| <= bound(kind), in a fixed order.
const std::vector<SlopePair>& slope_candidates(SlopeKind kind);

// E01 bound exceeded, E02 common divisor, E03 zero direction.
std::vector<Diagnostic> validate_slope(long long a, long long b, SlopeKind kind, Span span = {});

// The {len} argument: |dx| for non-vertical strokes, |dy| for vertical ones.
// Throws Error(InconsistentSlope) if the pair does not describe p1 - p0.
long long line_length_arg(Point p0, Point p1, SlopePair pair);

}  // namespace texpic
