#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "corrfn/geometry.hpp"

namespace corrfn {

/// Rectangular patch of sky in degrees.
struct SkyRegion {
  double ra_min = 0.0;
  double ra_max = 360.0;
  double dec_min = -90.0;
  double dec_max = 90.0;

  static SkyRegion full_sky() { return {}; }
  void validate() const;
};

/*
 * Immutable list of sky positions used as a data (D) or random (R) input.
 *
 * Construction validates every record: ra in [0, 360), dec in [-90, 90],
 * and z >= 0 when the catalog carries redshift. Redshift is all-or-nothing
 * per catalog.
 */
class GalaxyCatalog {
public:
  GalaxyCatalog() = default;
  GalaxyCatalog(std::vector<SkyPosition> positions, bool has_redshift,
                std::string label = {}, std::string source = {});

  std::size_t size() const { return positions_.size(); }
  bool empty() const { return positions_.empty(); }
  bool has_redshift() const { return has_redshift_; }
  const std::string &label() const { return label_; }
  const std::string &source() const { return source_; }
  std::span<const SkyPosition> positions() const { return positions_; }
  const SkyPosition &operator[](std::size_t i) const { return positions_[i]; }

  GalaxyCatalog with_label(std::string label) const;

  friend bool operator==(const GalaxyCatalog &a, const GalaxyCatalog &b) {
    return a.has_redshift_ == b.has_redshift_ && a.positions_ == b.positions_;
  }

private:
  std::vector<SkyPosition> positions_;
  bool has_redshift_ = false;
  std::string label_;
  std::string source_;
};

/// Reads a `ra_deg,dec_deg[,z]` CSV. With `require_redshift` the z column
/// must be present; without it, a z column is still loaded when found.
GalaxyCatalog load_catalog(const std::filesystem::path &path,
                           bool require_redshift = false);

/// Writes the CSV format read by load_catalog, with round-trip precision.
void save_catalog(const GalaxyCatalog &cat, const std::filesystem::path &path);

/// Uniform on the sphere within `region` (uniform ra, uniform sin(dec)).
GalaxyCatalog generate_random_catalog(std::size_t n, const SkyRegion &region,
                                      bool with_redshift, double z_max,
                                      std::uint64_t seed);

GalaxyCatalog generate_degenerate_catalog(std::size_t n, double ra, double dec,
                                          std::optional<double> z = std::nullopt);

/// k concatenated copies of `cat`.
GalaxyCatalog replicate_catalog(const GalaxyCatalog &cat, std::size_t k);

} // namespace corrfn
