#include "texpic/slope.hpp"

#include <cmath>
#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "texpic/error.hpp"

namespace texpic {
namespace {

constexpr double kIntegerTolerance = 1e-9;
constexpr double kTieTolerance = 1e-12;

std::optional<long long> as_integer(double v) {
  const double r = std::nearbyint(v);
  if (std::fabs(v - r) > kIntegerTolerance) return std::nullopt;
  return static_cast<long long>(r);
}

double angle_between(double from, double to) {
  double d = std::fabs(from - to);
  if (d > std::numbers::pi) d = 2.0 * std::numbers::pi - d;
  return d;
}

std::vector<SlopePair> build_candidates(int bound) {
  std::vector<SlopePair> out;
  for (int a = -bound; a <= bound; ++a) {
    for (int b = -bound; b <= bound; ++b) {
      if (std::gcd(a, b) == 1) out.push_back({a, b});
    }
  }
  return out;
}

}  // namespace

std::optional<SlopePair> reduce_direction(double dx, double dy) {
  if (dx == 0.0 && dy == 0.0) throw Error(ErrorCode::ZeroDirection, "direction (0,0)");
  const auto ix = as_integer(dx);
  const auto iy = as_integer(dy);
  if (!ix || !iy) return std::nullopt;
  if (*ix == 0 && *iy == 0) throw Error(ErrorCode::ZeroDirection, "direction rounds to (0,0)");
  const long long g = std::gcd(*ix, *iy);
  const long long a = *ix / g;
  const long long b = *iy / g;
  if (std::llabs(a) > 1'000'000'000LL || std::llabs(b) > 1'000'000'000LL) return std::nullopt;
  return SlopePair{static_cast<int>(a), static_cast<int>(b)};
}

const std::vector<SlopePair>& slope_candidates(SlopeKind kind) {
  static const std::vector<SlopePair> line = build_candidates(slope_bound(SlopeKind::Line));
  static const std::vector<SlopePair> vector = build_candidates(slope_bound(SlopeKind::Vector));
  return kind == SlopeKind::Line ? line : vector;
}

RationalSlope rationalize_slope(double dx, double dy, SlopeKind kind) {
  if (dx == 0.0 && dy == 0.0) throw Error(ErrorCode::ZeroDirection, "direction (0,0)");
  const double target = std::atan2(dy, dx);
  const auto& candidates = slope_candidates(kind);

  RationalSlope best{candidates.front(), std::numeric_limits<double>::infinity()};
  for (const SlopePair& cand : candidates) {
    const double err = angle_between(target, std::atan2(cand.b, cand.a));
    if (err < best.angular_error - kTieTolerance) {
      best = {cand, err};
      continue;
    }
    if (err > best.angular_error + kTieTolerance) continue;
    const int size_cand = std::abs(cand.a) + std::abs(cand.b);
    const int size_best = std::abs(best.pair.a) + std::abs(best.pair.b);
    const bool wins = size_cand != size_best ? size_cand < size_best
                      : cand.a != best.pair.a ? cand.a > best.pair.a
                                              : cand.b > best.pair.b;
    if (wins) best = {cand, std::min(err, best.angular_error)};
  }
  // An exactly representable direction reports zero error, not atan2 noise.
  if (const auto exact = reduce_direction(dx, dy); exact && *exact == best.pair) {
    best.angular_error = 0.0;
  }
  return best;
}

std::vector<Diagnostic> validate_slope(long long a, long long b, SlopeKind kind, Span span) {
  std::vector<Diagnostic> out;
  const char* what = kind == SlopeKind::Line ? "\\line" : "\\vector";
  const std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  if (a == 0 && b == 0) {
    out.push_back({Rule::E03_ZeroSlope, span, std::string(what) + " slope " + pair + " has no direction"});
    return out;
  }
  const int bound = slope_bound(kind);
  if (std::max(std::llabs(a), std::llabs(b)) > bound) {
    out.push_back({Rule::E01_SlopeBound, span,
                   std::string(what) + " slope " + pair + " exceeds " + std::to_string(bound) +
                       " in absolute value"});
  }
  if (const long long g = std::gcd(a, b); g > 1) {
    out.push_back({Rule::E02_CommonDivisor, span,
                   std::string(what) + " slope " + pair + " has common divisor " + std::to_string(g)});
  }
  return out;
}

long long line_length_arg(Point p0, Point p1, SlopePair pair) {
  const double dx = p1.x - p0.x;
  const double dy = p1.y - p0.y;
  std::optional<SlopePair> reduced;
  if (dx != 0.0 || dy != 0.0) reduced = reduce_direction(dx, dy);
  if (!reduced || *reduced != pair) {
    throw Error(ErrorCode::InconsistentSlope, "slope (" + std::to_string(pair.a) + "," +
                                                  std::to_string(pair.b) +
                                                  ") does not match the stroke direction");
  }
  return std::llround(std::fabs(pair.a != 0 ? dx : dy));
}

}  // namespace texpic
