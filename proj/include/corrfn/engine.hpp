#pragma once

#include <cstddef>
#include <cstdint>

#include "corrfn/binary32.hpp"
#include "corrfn/catalog.hpp"
#include "corrfn/geometry.hpp"
#include "corrfn/histogram.hpp"

namespace corrfn {

struct EngineConfig {
  std::size_t workers = 1;
  CountMode mode = CountMode::U64Exact;
  /// Evaluations per worker between flushes; F32Recycling only.
  std::uint64_t flush_interval = kF32ConsecutiveLimit;
  /// Outer-loop rows handed to a worker per work unit.
  std::size_t chunk = 1024;

  void validate() const;
};

/*
 * Pair and triplet counting.
 *
 * Each worker owns a private sub-histogram in the representation selected
 * by EngineConfig::mode and pulls contiguous chunks of outer-loop rows from
 * a shared queue. Sub-histograms are merged into the 64-bit result either
 * once when the worker finishes, or (F32Recycling) every flush_interval
 * evaluations, after which the sub-histogram is zeroed.
 *
 * Conventions:
 *   auto pairs      ordered (i, j), i != j            N(N-1) evaluations
 *   cross pairs     every (i in D, j in R) once       Nd*Nr
 *   auto triplets   ordered distinct (i, j, k)        N(N-1)(N-2)
 *   cross triplets  ordered distinct (i, j) in A, k in B   Na(Na-1)*Nb
 */
Histogram count_pairs_auto(const GalaxyCatalog &cat, const Binning &b,
                           const EngineConfig &cfg);

Histogram count_pairs_cross(const GalaxyCatalog &d, const GalaxyCatalog &r,
                            const Binning &b, const EngineConfig &cfg);

/// (theta, dz) grids; both catalogs must carry redshift.
Histogram count_pairs_3d_auto(const GalaxyCatalog &cat, const Binning &ab,
                              const RedshiftBinning &zb, const EngineConfig &cfg);

Histogram count_pairs_3d_cross(const GalaxyCatalog &d, const GalaxyCatalog &r,
                               const Binning &ab, const RedshiftBinning &zb,
                               const EngineConfig &cfg);

Histogram count_triplets_auto(const GalaxyCatalog &cat, const Binning3D &b3,
                              const EngineConfig &cfg);

/// Two points from `two_from`, the third from `one_from`: DDR with
/// (D, R), DRR with (R, D).
Histogram count_triplets_cross(const GalaxyCatalog &two_from,
                               const GalaxyCatalog &one_from,
                               const Binning3D &b3, const EngineConfig &cfg);

} // namespace corrfn
