#include "corrfn/histogram.hpp"

#include <numeric>
#include <stdexcept>

namespace corrfn {

std::string to_string(CountMode mode) {
  switch (mode) {
  case CountMode::U64Exact: return "u64";
  case CountMode::F64: return "f64";
  case CountMode::F32Standard: return "f32-std";
  case CountMode::F32Recycling: return "f32-recycle";
  }
  return "unknown";
}

CountMode parse_count_mode(const std::string &name) {
  if (name == "u64") return CountMode::U64Exact;
  if (name == "f64") return CountMode::F64;
  if (name == "f32-std") return CountMode::F32Standard;
  if (name == "f32-recycle") return CountMode::F32Recycling;
  throw std::invalid_argument("unknown count mode '" + name +
                              "' (expected u64, f64, f32-std or f32-recycle)");
}

bool is_exact(CountMode mode) { return mode != CountMode::F32Standard; }

Histogram Histogram::pairs(const Binning &b, CountMode mode) {
  Histogram h;
  h.dims = 1;
  h.shape = {b.nbins()};
  h.counts.assign(b.nbins(), 0);
  h.angular = b;
  h.mode = mode;
  return h;
}

Histogram Histogram::pairs3d(const Binning &b, const RedshiftBinning &zb,
                             CountMode mode) {
  Histogram h;
  h.dims = 2;
  h.shape = {b.nbins(), zb.nbins()};
  h.counts.assign(b.nbins() * zb.nbins(), 0);
  h.angular = b;
  h.redshift = zb;
  h.mode = mode;
  return h;
}

Histogram Histogram::triplets(const Binning3D &b3, CountMode mode) {
  const std::size_t n = b3.nbins();
  Histogram h;
  h.dims = 3;
  h.shape = {n, n, n};
  h.counts.assign(n * n * n, 0);
  h.angular = b3.per_angle;
  h.mode = mode;
  return h;
}

std::uint64_t Histogram::sum() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::string shape_mismatch(const Histogram &a, const Histogram &b) {
  if (a.dims != b.dims)
    return "dimensionality differs: " + std::to_string(a.dims) + " vs " +
           std::to_string(b.dims);
  for (std::size_t axis = 0; axis < a.shape.size(); ++axis) {
    if (a.shape[axis] != b.shape[axis])
      return "axis " + std::to_string(axis) + ": " + std::to_string(a.shape[axis]) +
             " vs " + std::to_string(b.shape[axis]) + " bins";
  }
  return {};
}

} // namespace corrfn
