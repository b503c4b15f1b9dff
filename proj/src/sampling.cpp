#include "toric/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace toric {

namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

double radical_inverse(std::uint64_t index, int base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
    f /= base;
  }
  return result;
}

// Distance from `from` along `dir` to the first facet, capped at the probe box.
double ray_extent(const PolyhedralSet& set, const Point& from, const Point& dir) {
  const double r = set.probe_radius();
  double t = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < dir.size(); ++j) {
    if (dir(j) > 0) t = std::min(t, (r - from(j)) / dir(j));
    if (dir(j) < 0) t = std::min(t, (-r - from(j)) / dir(j));
  }
  const Eigen::VectorXd values = set.affine_values(from);
  const Eigen::VectorXd slopes = set.normals() * dir;
  for (Eigen::Index i = 0; i < slopes.size(); ++i) {
    if (slopes(i) < 0) t = std::min(t, values(i) / -slopes(i));
  }
  return std::max(t, 0.0);
}

void grow_box(const PolyhedralSet& set, const Point& from, SampleBox& box) {
  const int n = set.dim();
  for (int j = 0; j < n; ++j) {
    Point dir = Point::Zero(n);
    dir(j) = 1.0;
    box.hi(j) = std::max(box.hi(j), from(j) + ray_extent(set, from, dir));
    dir(j) = -1.0;
    box.lo(j) = std::min(box.lo(j), from(j) - ray_extent(set, from, dir));
  }
}

}  // namespace

Point halton_point(std::uint64_t index, int dim) {
  if (dim > static_cast<int>(std::size(kPrimes))) throw std::invalid_argument("halton_point: dimension too large");
  Point p(dim);
  for (int j = 0; j < dim; ++j) p(j) = radical_inverse(index, kPrimes[j]);
  return p;
}

SampleBox sampling_box(const PolyhedralSet& set) {
  const Point& w = set.interior_point();
  SampleBox box{w, w};
  grow_box(set, w, box);
  // Two refinement rounds from points of the current box that are interior.
  for (int round = 0; round < 2; ++round) {
    const SampleBox current = box;
    for (std::uint64_t k = 1; k <= 16; ++k) {
      const Point u = halton_point(k, set.dim());
      const Point x = current.lo + (current.hi - current.lo).cwiseProduct(u);
      if (set.contains_interior(x, 0.0)) grow_box(set, x, box);
    }
  }
  return box;
}

std::vector<Point> interior_samples(const PolyhedralSet& set, std::size_t count, const SamplingOptions& options) {
  const int n = set.dim();
  const SampleBox box = sampling_box(set);
  const double witness_margin = std::min(set.boundary_distance(set.interior_point()), set.probe_radius());
  const double margin = std::min(options.margin_fraction * box.diagonal(), 0.5 * witness_margin);

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Point shift(n);
  for (int j = 0; j < n; ++j) shift(j) = unit(rng);

  std::vector<Point> out;
  out.reserve(count);
  const std::uint64_t max_attempts = 20000 * (count + 1);
  for (std::uint64_t k = 1; out.size() < count && k <= max_attempts; ++k) {
    Point u = halton_point(k, n) + shift;
    for (int j = 0; j < n; ++j) u(j) -= std::floor(u(j));
    const Point x = box.lo + (box.hi - box.lo).cwiseProduct(u);
    if (set.boundary_distance(x) >= margin) out.push_back(x);
  }
  if (out.size() < count) {
    throw std::runtime_error("interior_samples: accepted only " + std::to_string(out.size()) + " of " +
                             std::to_string(count) + " points");
  }
  return out;
}

}  // namespace toric
