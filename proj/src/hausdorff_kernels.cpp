#include "texpic/hausdorff_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace texpic::kernels {
namespace {

inline double dist2(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace

double directed_hausdorff_serial(std::span<const Point> from, std::span<const Point> to) {
  double worst = 0.0;
  for (const Point p : from) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point q : to) best = std::min(best, dist2(p, q));
    worst = std::max(worst, best);
  }
  return std::sqrt(worst);
}

double directed_hausdorff_parallel(std::span<const Point> from, std::span<const Point> to) {
  const auto n = static_cast<std::ptrdiff_t>(from.size());
  const auto m = to.size();
  const Point* src = from.data();
  const Point* dst = to.data();
  double worst = 0.0;
#pragma omp parallel for schedule(dynamic, 256) reduction(max : worst)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Point p = src[i];
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) {
      best = std::min(best, dist2(p, dst[j]));
      // p can no longer raise this thread's maximum
      if (best <= worst) break;
    }
    worst = std::max(worst, best);
  }
  return std::sqrt(worst);
}

}  // namespace texpic::kernels
