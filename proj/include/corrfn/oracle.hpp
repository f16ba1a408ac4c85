#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "corrfn/catalog.hpp"
#include "corrfn/geometry.hpp"
#include "corrfn/histogram.hpp"

namespace corrfn {

/// Largest enumeration the oracle will attempt.
inline constexpr std::uint64_t kOracleGuard = 100'000'000ULL;

class OracleGuardExceeded : public std::runtime_error {
public:
  OracleGuardExceeded(std::uint64_t evaluations);
  std::uint64_t evaluations() const { return evaluations_; }

private:
  std::uint64_t evaluations_;
};

struct BinMismatch {
  std::size_t index = 0;
  std::uint64_t expected = 0;
  std::uint64_t got = 0;
  /// Total number of differing bins.
  std::size_t count = 0;
};

struct OracleReport {
  Histogram histogram;
  std::optional<BinMismatch> mismatch;

  /// Compares against an engine result and records the first differing
  /// bin. Returns true on a bin-exact match.
  bool compare(const Histogram &engine);
};

/*
 * Brute-force reference counts. Single-threaded plain loops over every
 * ordered pair or triple, with the same conventions as the engine, counted
 * in 64-bit integers. Angles come from the geometry module; nothing else
 * is shared with the engine.
 *
 * All functions throw OracleGuardExceeded above kOracleGuard evaluations.
 */
OracleReport oracle_pairs(const GalaxyCatalog &cat, const Binning &b);
OracleReport oracle_pairs(const GalaxyCatalog &d, const GalaxyCatalog &r,
                          const Binning &b);
OracleReport oracle_pairs(const GalaxyCatalog &cat, const Binning &b,
                          const RedshiftBinning &zb);
OracleReport oracle_pairs(const GalaxyCatalog &d, const GalaxyCatalog &r,
                          const Binning &b, const RedshiftBinning &zb);

OracleReport oracle_triplets(const GalaxyCatalog &cat, const Binning3D &b3);
OracleReport oracle_triplets(const GalaxyCatalog &two_from,
                             const GalaxyCatalog &one_from, const Binning3D &b3);

/// Evaluation counts of each enumeration, for guard checks up front.
std::uint64_t auto_pair_evaluations(std::uint64_t n);
std::uint64_t auto_triplet_evaluations(std::uint64_t n);
std::uint64_t cross_triplet_evaluations(std::uint64_t n_two, std::uint64_t n_one);

} // namespace corrfn
