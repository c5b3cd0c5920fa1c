#pragma once

#include <span>

#include "texpic/geometry.hpp"

namespace texpic::kernels {

// max over `from` of the distance to the nearest point of `to`.
// Both ranges must be non-empty.

// Plain double loop; the reference the parallel kernel is tested against.
double directed_hausdorff_serial(std::span<const Point> from, std::span<const Point> to);

// OpenMP over `from`, with an early exit once a point is known not to raise
// the running maximum. Produces bit-identical results to the serial kernel.
double directed_hausdorff_parallel(std::span<const Point> from, std::span<const Point> to);

}  // namespace texpic::kernels
