#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corrfn/geometry.hpp"

namespace corrfn {

/*
 * How per-worker sub-histograms hold their counts.
 *
 *   U64Exact      64-bit integers, merged once at the end
 *   F64           binary64, merged once at the end
 *   F32Standard   emulated binary32, merged once at the end (saturates)
 *   F32Recycling  emulated binary32, flushed and zeroed periodically
 */
enum class CountMode { U64Exact, F64, F32Standard, F32Recycling };

std::string to_string(CountMode mode);
CountMode parse_count_mode(const std::string &name);
/// True for the modes whose result is independent of worker count.
bool is_exact(CountMode mode);

/// Merged counts for one of DD/DR/RR (dims 1), their (theta, dz) grids
/// (dims 2), or DDD/DDR/DRR/RRR (dims 3).
struct Histogram {
  int dims = 1;
  std::vector<std::size_t> shape;
  /// Row-major; angular axis outermost for dims 2, (theta1, theta2, theta3)
  /// for dims 3.
  std::vector<std::uint64_t> counts;
  std::uint64_t total_evaluations = 0;
  std::uint64_t in_range = 0;
  Binning angular = Binning::full_range();
  std::optional<RedshiftBinning> redshift;
  CountMode mode = CountMode::U64Exact;

  static Histogram pairs(const Binning &b, CountMode mode);
  static Histogram pairs3d(const Binning &b, const RedshiftBinning &zb,
                           CountMode mode);
  static Histogram triplets(const Binning3D &b3, CountMode mode);

  std::size_t size() const { return counts.size(); }
  std::uint64_t sum() const;
  std::uint64_t at(std::size_t i) const { return counts[i]; }
  std::uint64_t at(std::size_t i, std::size_t j) const {
    return counts[i * shape[1] + j];
  }
  std::uint64_t at(std::size_t i, std::size_t j, std::size_t k) const {
    return counts[(i * shape[1] + j) * shape[2] + k];
  }
};

/// First axis on which two histograms disagree in size, as a readable
/// message; empty when the shapes match.
std::string shape_mismatch(const Histogram &a, const Histogram &b);

} // namespace corrfn
