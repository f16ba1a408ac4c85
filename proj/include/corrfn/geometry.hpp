#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace corrfn {

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// A catalog record: right ascension and declination in degrees, plus a
/// redshift that is meaningful only when the owning catalog carries one.
struct SkyPosition {
  double ra = 0.0;
  double dec = 0.0;
  double z = 0.0;

  friend bool operator==(const SkyPosition &, const SkyPosition &) = default;
};

/// Cartesian point on the unit sphere.
struct UnitVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline UnitVector to_unit_vector(const SkyPosition &p) {
  const double ra = deg_to_rad(p.ra);
  const double dec = deg_to_rad(p.dec);
  const double c = std::cos(dec);
  return {c * std::cos(ra), c * std::sin(ra), std::sin(dec)};
}

/*
 * Great-circle angle in radians, [0, pi].
 *
 * Haversine in chord form: hav(theta) = |u - v|^2 / 4, so
 * theta = 2 asin(|u - v| / 2). Differences of nearby unit vectors keep
 * full relative precision as theta -> 0, unlike acos(u . v).
 */
inline double angular_separation(const UnitVector &a, const UnitVector &b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  const double half_chord = 0.5 * std::sqrt(dx * dx + dy * dy + dz * dz);
  return 2.0 * std::asin(half_chord < 1.0 ? half_chord : 1.0);
}

inline double angular_separation(const SkyPosition &a, const SkyPosition &b) {
  return angular_separation(to_unit_vector(a), to_unit_vector(b));
}

/// |z_a - z_b|. Callers guarantee both records carry redshift; see
/// GalaxyCatalog::has_redshift.
inline double redshift_separation(const SkyPosition &a, const SkyPosition &b) {
  return std::fabs(a.z - b.z);
}

/// The three pairwise separations of a triplet, sorted ascending.
using TripletAngles = std::array<double, 3>;

inline TripletAngles sort_angles(double ab, double bc, double ca) {
  if (ab > bc) std::swap(ab, bc);
  if (bc > ca) std::swap(bc, ca);
  if (ab > bc) std::swap(ab, bc);
  return {ab, bc, ca};
}

inline TripletAngles triplet_angles(const UnitVector &a, const UnitVector &b,
                                    const UnitVector &c) {
  return sort_angles(angular_separation(a, b), angular_separation(b, c),
                     angular_separation(c, a));
}

inline TripletAngles triplet_angles(const SkyPosition &a, const SkyPosition &b,
                                    const SkyPosition &c) {
  return triplet_angles(to_unit_vector(a), to_unit_vector(b), to_unit_vector(c));
}

enum class BinScale { Linear, Logarithmic };

std::string to_string(BinScale scale);
BinScale parse_bin_scale(const std::string &name);

/*
 * One histogram axis: nbins half-open bins [edge_i, edge_{i+1}) over
 * [lo, hi], with the final bin closed on the right so that hi itself is
 * counted. Index lookup is arithmetic followed by a correction against the
 * stored edges, which makes the result agree exactly with the edges that
 * get serialized.
 */
class Axis {
public:
  Axis(double lo, double hi, std::size_t nbins, BinScale scale);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  std::size_t nbins() const { return nbins_; }
  BinScale scale() const { return scale_; }
  const std::vector<double> &edges() const { return edges_; }

  std::optional<std::size_t> index(double value) const {
    if (!(value >= lo_ && value <= hi_)) return std::nullopt;
    if (value == hi_) return nbins_ - 1;
    const double t = scale_ == BinScale::Linear
                         ? (value - lo_) * inv_span_
                         : std::log(value / lo_) * inv_span_;
    std::size_t i = t > 0.0 ? static_cast<std::size_t>(t) : 0;
    if (i >= nbins_) i = nbins_ - 1;
    while (i > 0 && value < edges_[i]) --i;
    while (i + 1 < nbins_ && value >= edges_[i + 1]) ++i;
    return i;
  }

  friend bool operator==(const Axis &a, const Axis &b) {
    return a.nbins_ == b.nbins_ && a.scale_ == b.scale_ && a.edges_ == b.edges_;
  }

private:
  double lo_;
  double hi_;
  std::size_t nbins_;
  BinScale scale_;
  double inv_span_;
  std::vector<double> edges_;
};

/// Angular axis in radians within [0, pi].
class Binning {
public:
  Binning(double lo, double hi, std::size_t nbins,
          BinScale scale = BinScale::Linear);

  static Binning from_degrees(double lo_deg, double hi_deg, std::size_t nbins,
                              BinScale scale = BinScale::Linear);
  /// 64 linear bins over [0, pi].
  static Binning full_range(std::size_t nbins = 64);

  const Axis &axis() const { return axis_; }
  std::size_t nbins() const { return axis_.nbins(); }
  double lo() const { return axis_.lo(); }
  double hi() const { return axis_.hi(); }
  BinScale scale() const { return axis_.scale(); }
  const std::vector<double> &edges() const { return axis_.edges(); }
  std::vector<double> edges_deg() const;

  std::optional<std::size_t> index(double theta) const {
    return axis_.index(theta);
  }

  friend bool operator==(const Binning &, const Binning &) = default;

private:
  Axis axis_;
};

/// Linear axis over redshift differences.
class RedshiftBinning {
public:
  RedshiftBinning(double lo, double hi, std::size_t nbins);

  const Axis &axis() const { return axis_; }
  std::size_t nbins() const { return axis_.nbins(); }
  double lo() const { return axis_.lo(); }
  double hi() const { return axis_.hi(); }
  const std::vector<double> &edges() const { return axis_.edges(); }

  std::optional<std::size_t> index(double dz) const { return axis_.index(dz); }

  friend bool operator==(const RedshiftBinning &, const RedshiftBinning &) = default;

private:
  Axis axis_;
};

/// Triplet binning: the same angular axis applied to each sorted angle.
struct Binning3D {
  Binning per_angle;

  std::size_t nbins() const { return per_angle.nbins(); }

  friend bool operator==(const Binning3D &, const Binning3D &) = default;
};

inline std::optional<std::size_t> bin_index(const Binning &b, double theta) {
  return b.index(theta);
}

} // namespace corrfn
