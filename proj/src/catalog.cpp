#include "corrfn/catalog.hpp"

#include <charconv>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace corrfn {

namespace {

void check_position(const SkyPosition &p, bool has_redshift, std::size_t row) {
  auto where = [row] { return "record " + std::to_string(row) + ": "; };
  if (!(p.ra >= 0.0 && p.ra < 360.0))
    throw std::invalid_argument(where() + "ra_deg " + std::to_string(p.ra) +
                                " outside [0, 360)");
  if (!(p.dec >= -90.0 && p.dec <= 90.0))
    throw std::invalid_argument(where() + "dec_deg " + std::to_string(p.dec) +
                                " outside [-90, 90]");
  if (has_redshift && !(p.z >= 0.0 && std::isfinite(p.z)))
    throw std::invalid_argument(where() + "z " + std::to_string(p.z) +
                                " must be finite and >= 0");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Uniform double in [0, 1) from the top 53 bits; portable across standard
// libraries, unlike std::uniform_real_distribution.
double unit_uniform(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

void SkyRegion::validate() const {
  if (!(ra_min >= 0.0 && ra_max <= 360.0 && ra_min < ra_max))
    throw std::invalid_argument("sky region requires 0 <= ra_min < ra_max <= 360");
  if (!(dec_min >= -90.0 && dec_max <= 90.0 && dec_min < dec_max))
    throw std::invalid_argument(
        "sky region requires -90 <= dec_min < dec_max <= 90");
}

GalaxyCatalog::GalaxyCatalog(std::vector<SkyPosition> positions,
                             bool has_redshift, std::string label,
                             std::string source)
    : positions_(std::move(positions)), has_redshift_(has_redshift),
      label_(std::move(label)), source_(std::move(source)) {
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    check_position(positions_[i], has_redshift_, i);
    if (!has_redshift_) positions_[i].z = 0.0;
  }
}

GalaxyCatalog GalaxyCatalog::with_label(std::string label) const {
  GalaxyCatalog out = *this;
  out.label_ = std::move(label);
  return out;
}

GalaxyCatalog load_catalog(const std::filesystem::path &path,
                           bool require_redshift) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog '" + path.string() + "'");

  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(path.string() + ": missing header line");
  const auto header = split_fields(line);
  const bool has_z = header.size() == 3 && header[2] == "z";
  if (header.size() < 2 || header.size() > 3 || header[0] != "ra_deg" ||
      header[1] != "dec_deg" || (header.size() == 3 && !has_z))
    throw std::runtime_error(path.string() +
                             ": header must be 'ra_deg,dec_deg' or "
                             "'ra_deg,dec_deg,z', got '" + line + "'");
  if (require_redshift && !has_z)
    throw std::runtime_error(path.string() + ": missing required column 'z'");

  std::vector<SkyPosition> positions;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    auto fail = [&](const std::string &what) {
      return std::runtime_error(path.string() + ": row " +
                                std::to_string(positions.size() + 1) + " (line " +
                                std::to_string(line_no) + "): " + what);
    };
    if (fields.size() != header.size())
      throw fail("expected " + std::to_string(header.size()) + " fields, got " +
                 std::to_string(fields.size()));
    double values[3] = {0.0, 0.0, 0.0};
    for (std::size_t f = 0; f < fields.size(); ++f) {
      const auto field = fields[f];
      const auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), values[f]);
      if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
        throw fail("cannot parse '" + std::string(field) + "' as a number");
    }
    const SkyPosition p{values[0], values[1], values[2]};
    try {
      check_position(p, has_z, positions.size() + 1);
    } catch (const std::invalid_argument &e) {
      throw fail(e.what());
    }
    positions.push_back(p);
  }
  return GalaxyCatalog(std::move(positions), has_z, path.stem().string(),
                       path.string());
}

void save_catalog(const GalaxyCatalog &cat, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write catalog '" + path.string() + "'");
  out << (cat.has_redshift() ? "ra_deg,dec_deg,z\n" : "ra_deg,dec_deg\n");
  char buf[32];
  auto put = [&](double v) {
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.write(buf, res.ptr - buf);
  };
  for (const auto &p : cat.positions()) {
    put(p.ra);
    out << ',';
    put(p.dec);
    if (cat.has_redshift()) {
      out << ',';
      put(p.z);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

GalaxyCatalog generate_random_catalog(std::size_t n, const SkyRegion &region,
                                      bool with_redshift, double z_max,
                                      std::uint64_t seed) {
  region.validate();
  if (with_redshift && !(z_max > 0.0))
    throw std::invalid_argument("z_max must be > 0 when generating redshifts");

  std::mt19937_64 rng(seed);
  const double s_lo = std::sin(deg_to_rad(region.dec_min));
  const double s_hi = std::sin(deg_to_rad(region.dec_max));
  std::vector<SkyPosition> positions(n);
  for (auto &p : positions) {
    p.ra = region.ra_min + (region.ra_max - region.ra_min) * unit_uniform(rng);
    if (p.ra >= 360.0) p.ra -= 360.0;
    const double s = s_lo + (s_hi - s_lo) * unit_uniform(rng);
    p.dec = std::clamp(rad_to_deg(std::asin(std::clamp(s, -1.0, 1.0))), -90.0, 90.0);
    if (with_redshift) p.z = z_max * unit_uniform(rng);
  }

  std::ostringstream source;
  source << "random(n=" << n << ", ra=[" << region.ra_min << "," << region.ra_max
         << "], dec=[" << region.dec_min << "," << region.dec_max << "]";
  if (with_redshift) source << ", z_max=" << z_max;
  source << ", seed=" << seed << ")";
  return GalaxyCatalog(std::move(positions), with_redshift, "R", source.str());
}

GalaxyCatalog generate_degenerate_catalog(std::size_t n, double ra, double dec,
                                          std::optional<double> z) {
  if (n < 1) throw std::invalid_argument("degenerate catalog needs n >= 1");
  const SkyPosition p{ra, dec, z.value_or(0.0)};
  std::ostringstream source;
  source << "degenerate(n=" << n << ", ra=" << ra << ", dec=" << dec;
  if (z) source << ", z=" << *z;
  source << ")";
  return GalaxyCatalog(std::vector<SkyPosition>(n, p), z.has_value(), "D",
                       source.str());
}

GalaxyCatalog replicate_catalog(const GalaxyCatalog &cat, std::size_t k) {
  if (k < 1) throw std::invalid_argument("replication factor must be >= 1");
  std::vector<SkyPosition> positions;
  positions.reserve(cat.size() * k);
  for (std::size_t copy = 0; copy < k; ++copy)
    positions.insert(positions.end(), cat.positions().begin(),
                     cat.positions().end());
  return GalaxyCatalog(std::move(positions), cat.has_redshift(), cat.label(),
                       cat.source() + " x" + std::to_string(k));
}

} // namespace corrfn
