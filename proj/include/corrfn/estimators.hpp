#pragma once

#include <cstdint>
#include <vector>

#include "corrfn/histogram.hpp"

namespace corrfn {

/// Per-bin estimator values aligned with the input histograms. `valid[i]`
/// is false exactly where the random-random denominator is zero, and the
/// matching value is then 0 and meaningless.
struct EstimatorResult {
  std::vector<std::size_t> shape;
  std::vector<double> values;
  std::vector<bool> valid;
  std::uint64_t n_real = 0;
  std::uint64_t n_random = 0;

  std::size_t valid_count() const;
};

/// Landy-Szalay:
///   w = 1 + (Nr/Nd)^2 DD/RR - 2 (Nr/Nd) DR/RR
EstimatorResult landy_szalay_2pacf(const Histogram &dd, const Histogram &dr,
                                   const Histogram &rr, std::uint64_t n_real,
                                   std::uint64_t n_random);

/// The same combination applied cell-wise to (theta, dz) grids.
EstimatorResult estimate_2p3dcf(const Histogram &dd, const Histogram &dr,
                                const Histogram &rr, std::uint64_t n_real,
                                std::uint64_t n_random);

/// zeta = (Nr/Nd)^3 DDD/RRR - 3 (Nr/Nd)^2 DDR/RRR + 3 (Nr/Nd) DRR/RRR - 1
EstimatorResult estimate_3pacf(const Histogram &ddd, const Histogram &ddr,
                               const Histogram &drr, const Histogram &rrr,
                               std::uint64_t n_real, std::uint64_t n_random);

} // namespace corrfn
