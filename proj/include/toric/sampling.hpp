#pragma once

#include <cstdint>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

struct SamplingOptions {
  std::uint64_t seed = 20240607;
  /// Required distance to the boundary, as a fraction of the sampling box diagonal.
  double margin_fraction = 0.05;
};

/// Axis-aligned box used to draw candidate points.
struct SampleBox {
  Point lo;
  Point hi;
  double diagonal() const { return (hi - lo).norm(); }
};

/// Box spanned by axis-parallel ray casts from interior points, clipped to the
/// probe box of the set.
SampleBox sampling_box(const PolyhedralSet& set);

/// `count` interior points from a randomly shifted Halton sequence, kept at
/// distance >= min(margin_fraction * diagonal, witness margin / 2) from every
/// facet. Deterministic in (set, count, options). Throws std::runtime_error if
/// too few points are accepted.
std::vector<Point> interior_samples(const PolyhedralSet& set, std::size_t count,
                                    const SamplingOptions& options = {});

/// i-th point of the Halton sequence in [0,1)^dim (prime bases 2, 3, 5, ...).
Point halton_point(std::uint64_t index, int dim);

}  // namespace toric
