#include "corrfn/oracle.hpp"

#include <vector>

namespace corrfn {

namespace {

void guard(std::uint64_t evaluations) {
  if (evaluations > kOracleGuard) throw OracleGuardExceeded(evaluations);
}

std::vector<UnitVector> to_vectors(const GalaxyCatalog &cat) {
  std::vector<UnitVector> out;
  for (std::size_t i = 0; i < cat.size(); ++i) out.push_back(to_unit_vector(cat[i]));
  return out;
}

void tally(Histogram &h, std::optional<std::size_t> cell) {
  ++h.total_evaluations;
  if (!cell) return;
  ++h.counts[*cell];
  ++h.in_range;
}

std::optional<std::size_t> cell_2d(const Binning &b, const RedshiftBinning &zb,
                                   const SkyPosition &p, const SkyPosition &q) {
  const auto t = b.index(angular_separation(p, q));
  const auto z = zb.index(redshift_separation(p, q));
  if (!t || !z) return std::nullopt;
  return *t * zb.nbins() + *z;
}

std::optional<std::size_t> cell_3d(const Binning &b, const TripletAngles &angles) {
  const auto i = b.index(angles[0]);
  const auto j = b.index(angles[1]);
  const auto k = b.index(angles[2]);
  if (!i || !j || !k) return std::nullopt;
  const std::size_t n = b.nbins();
  return *i * n * n + *j * n + *k;
}

void check_z(const GalaxyCatalog &cat) {
  if (!cat.has_redshift())
    throw std::invalid_argument("catalog has no redshift column 'z'");
}

} // namespace

OracleGuardExceeded::OracleGuardExceeded(std::uint64_t evaluations)
    : std::runtime_error("oracle guard exceeded: " + std::to_string(evaluations) +
                         " evaluations > " + std::to_string(kOracleGuard)),
      evaluations_(evaluations) {}

bool OracleReport::compare(const Histogram &engine) {
  mismatch.reset();
  if (!shape_mismatch(histogram, engine).empty() ||
      engine.counts.size() != histogram.counts.size()) {
    mismatch = BinMismatch{0, 0, 0, histogram.counts.size()};
    return false;
  }
  for (std::size_t i = 0; i < histogram.counts.size(); ++i) {
    if (histogram.counts[i] == engine.counts[i]) continue;
    if (!mismatch) mismatch = BinMismatch{i, histogram.counts[i], engine.counts[i], 0};
    ++mismatch->count;
  }
  return !mismatch.has_value();
}

std::uint64_t auto_pair_evaluations(std::uint64_t n) {
  return n < 2 ? 0 : n * (n - 1);
}

std::uint64_t auto_triplet_evaluations(std::uint64_t n) {
  return n < 3 ? 0 : n * (n - 1) * (n - 2);
}

std::uint64_t cross_triplet_evaluations(std::uint64_t n_two, std::uint64_t n_one) {
  return auto_pair_evaluations(n_two) * n_one;
}

OracleReport oracle_pairs(const GalaxyCatalog &cat, const Binning &b) {
  guard(auto_pair_evaluations(cat.size()));
  OracleReport report{Histogram::pairs(b, CountMode::U64Exact), {}};
  const auto u = to_vectors(cat);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j)
      if (i != j) tally(report.histogram, b.index(angular_separation(u[i], u[j])));
  return report;
}

OracleReport oracle_pairs(const GalaxyCatalog &d, const GalaxyCatalog &r,
                          const Binning &b) {
  guard(d.size() * r.size());
  OracleReport report{Histogram::pairs(b, CountMode::U64Exact), {}};
  const auto ud = to_vectors(d);
  const auto ur = to_vectors(r);
  for (const auto &p : ud)
    for (const auto &q : ur) tally(report.histogram, b.index(angular_separation(p, q)));
  return report;
}

OracleReport oracle_pairs(const GalaxyCatalog &cat, const Binning &b,
                          const RedshiftBinning &zb) {
  check_z(cat);
  guard(auto_pair_evaluations(cat.size()));
  OracleReport report{Histogram::pairs3d(b, zb, CountMode::U64Exact), {}};
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = 0; j < cat.size(); ++j)
      if (i != j) tally(report.histogram, cell_2d(b, zb, cat[i], cat[j]));
  return report;
}

OracleReport oracle_pairs(const GalaxyCatalog &d, const GalaxyCatalog &r,
                          const Binning &b, const RedshiftBinning &zb) {
  check_z(d);
  check_z(r);
  guard(d.size() * r.size());
  OracleReport report{Histogram::pairs3d(b, zb, CountMode::U64Exact), {}};
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      tally(report.histogram, cell_2d(b, zb, d[i], r[j]));
  return report;
}

OracleReport oracle_triplets(const GalaxyCatalog &cat, const Binning3D &b3) {
  guard(auto_triplet_evaluations(cat.size()));
  OracleReport report{Histogram::triplets(b3, CountMode::U64Exact), {}};
  const auto u = to_vectors(cat);
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        tally(report.histogram, cell_3d(b3.per_angle, triplet_angles(u[i], u[j], u[k])));
      }
    }
  return report;
}

OracleReport oracle_triplets(const GalaxyCatalog &two_from,
                             const GalaxyCatalog &one_from, const Binning3D &b3) {
  guard(cross_triplet_evaluations(two_from.size(), one_from.size()));
  OracleReport report{Histogram::triplets(b3, CountMode::U64Exact), {}};
  const auto ua = to_vectors(two_from);
  const auto ub = to_vectors(one_from);
  for (std::size_t i = 0; i < ua.size(); ++i)
    for (std::size_t j = 0; j < ua.size(); ++j) {
      if (j == i) continue;
      for (const auto &w : ub)
        tally(report.histogram, cell_3d(b3.per_angle, triplet_angles(ua[i], ua[j], w)));
    }
  return report;
}

} // namespace corrfn
