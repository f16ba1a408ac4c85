#include "corrfn/engine.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace corrfn {

namespace {

constexpr std::size_t kOut = std::numeric_limits<std::size_t>::max();

// Per-representation operations on one sub-histogram cell.
inline void increment(std::uint64_t &c) { ++c; }
inline void increment(double &c) { c += 1.0; }
inline void increment(SaturatingF32Accumulator &c) { c.increment(); }

inline std::uint64_t to_count(std::uint64_t c) { return c; }
inline std::uint64_t to_count(double c) { return static_cast<std::uint64_t>(c); }
inline std::uint64_t to_count(const SaturatingF32Accumulator &c) {
  return static_cast<std::uint64_t>(c.value());
}

inline void reset(std::uint64_t &c) { c = 0; }
inline void reset(double &c) { c = 0.0; }
inline void reset(SaturatingF32Accumulator &c) { c.reset(); }

struct MergeTarget {
  explicit MergeTarget(std::vector<std::uint64_t> &c) : counts(c) {}

  std::vector<std::uint64_t> &counts;
  std::uint64_t evaluations = 0;
  std::uint64_t in_range = 0;
  std::mutex mutex;
};

template <typename Cell, bool Recycling>
class Worker {
public:
  Worker(MergeTarget &target, std::size_t nbins, std::uint64_t flush_interval)
      : target_(target), sub_(nbins), flush_interval_(flush_interval) {}

  void operator()(std::size_t bin) {
    ++evaluations_;
    if (bin != kOut) {
      ++in_range_;
      increment(sub_[bin]);
    }
    if constexpr (Recycling) {
      if (++since_flush_ == flush_interval_) flush();
    }
  }

  void flush() {
    std::lock_guard lock(target_.mutex);
    for (std::size_t b = 0; b < sub_.size(); ++b) {
      target_.counts[b] += to_count(sub_[b]);
      reset(sub_[b]);
    }
    since_flush_ = 0;
  }

  void finish() {
    flush();
    std::lock_guard lock(target_.mutex);
    target_.evaluations += evaluations_;
    target_.in_range += in_range_;
  }

private:
  MergeTarget &target_;
  std::vector<Cell> sub_;
  std::uint64_t flush_interval_;
  std::uint64_t since_flush_ = 0;
  std::uint64_t evaluations_ = 0;
  std::uint64_t in_range_ = 0;
};

template <typename Cell, bool Recycling, typename RowFn>
void run_rows(MergeTarget &target, std::size_t rows, const RowFn &row_fn,
              const EngineConfig &cfg) {
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    Worker<Cell, Recycling> worker(target, target.counts.size(), cfg.flush_interval);
    while (true) {
      const std::size_t begin = next.fetch_add(cfg.chunk);
      if (begin >= rows) break;
      const std::size_t end = std::min(rows, begin + cfg.chunk);
      for (std::size_t row = begin; row < end; ++row) row_fn(row, worker);
    }
    worker.finish();
  };

  const std::size_t units = (rows + cfg.chunk - 1) / cfg.chunk;
  const std::size_t threads = std::max<std::size_t>(1, std::min(cfg.workers, units));
  if (threads == 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
}

// Drives `row_fn(row, sink)` over `rows` outer-loop rows and fills `h`.
template <typename RowFn>
Histogram run(Histogram h, std::size_t rows, const RowFn &row_fn,
              const EngineConfig &cfg) {
  cfg.validate();
  MergeTarget target(h.counts);
  switch (cfg.mode) {
  case CountMode::U64Exact:
    run_rows<std::uint64_t, false>(target, rows, row_fn, cfg);
    break;
  case CountMode::F64:
    run_rows<double, false>(target, rows, row_fn, cfg);
    break;
  case CountMode::F32Standard:
    run_rows<SaturatingF32Accumulator, false>(target, rows, row_fn, cfg);
    break;
  case CountMode::F32Recycling:
    run_rows<SaturatingF32Accumulator, true>(target, rows, row_fn, cfg);
    break;
  }
  h.total_evaluations = target.evaluations;
  h.in_range = target.in_range;
  return h;
}

std::vector<UnitVector> unit_vectors(const GalaxyCatalog &cat) {
  std::vector<UnitVector> out;
  out.reserve(cat.size());
  for (const auto &p : cat.positions()) out.push_back(to_unit_vector(p));
  return out;
}

void require_redshift(const GalaxyCatalog &cat, const char *role) {
  if (!cat.has_redshift())
    throw std::invalid_argument(std::string(role) +
                                " catalog has no redshift column 'z'");
}

// Angular bin of every (i, j) pair, row-major; kOut when out of range.
std::vector<std::size_t> pair_bins(const std::vector<UnitVector> &a,
                                   const std::vector<UnitVector> &b,
                                   const Binning &binning) {
  std::vector<std::size_t> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i * b.size() + j] =
          binning.index(angular_separation(a[i], b[j])).value_or(kOut);
  return out;
}

// Cell of a triplet from the bins of its three sides. Angular binning is
// monotone, so sorting bin indices equals binning the sorted angles.
inline std::size_t triplet_cell(std::size_t b1, std::size_t b2, std::size_t b3,
                                std::size_t n) {
  if (b1 == kOut || b2 == kOut || b3 == kOut) return kOut;
  if (b1 > b2) std::swap(b1, b2);
  if (b2 > b3) std::swap(b2, b3);
  if (b1 > b2) std::swap(b1, b2);
  return (b1 * n + b2) * n + b3;
}

} // namespace

void EngineConfig::validate() const {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (chunk < 1) throw std::invalid_argument("chunk must be >= 1");
  if (flush_interval < 1) throw std::invalid_argument("flush interval must be >= 1");
  if (mode == CountMode::F32Recycling && flush_interval > kF32ConsecutiveLimit)
    throw std::invalid_argument(
        "f32-recycle flush interval must not exceed 16777216 evaluations");
}

Histogram count_pairs_auto(const GalaxyCatalog &cat, const Binning &b,
                           const EngineConfig &cfg) {
  const auto u = unit_vectors(cat);
  const std::size_t n = u.size();
  // The chord is symmetric bit for bit, so (i, j) and (j, i) share one
  // separation and each contributes its own evaluation.
  auto row = [&](std::size_t i, auto &sink) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t bin = b.index(angular_separation(u[i], u[j])).value_or(kOut);
      sink(bin);
      sink(bin);
    }
  };
  return run(Histogram::pairs(b, cfg.mode), n, row, cfg);
}

Histogram count_pairs_cross(const GalaxyCatalog &d, const GalaxyCatalog &r,
                            const Binning &b, const EngineConfig &cfg) {
  const auto ud = unit_vectors(d);
  const auto ur = unit_vectors(r);
  auto row = [&](std::size_t i, auto &sink) {
    for (const auto &v : ur)
      sink(b.index(angular_separation(ud[i], v)).value_or(kOut));
  };
  return run(Histogram::pairs(b, cfg.mode), ud.size(), row, cfg);
}

Histogram count_pairs_3d_auto(const GalaxyCatalog &cat, const Binning &ab,
                              const RedshiftBinning &zb, const EngineConfig &cfg) {
  require_redshift(cat, "input");
  const auto u = unit_vectors(cat);
  const auto pos = cat.positions();
  const std::size_t n = u.size();
  const std::size_t nz = zb.nbins();
  auto row = [&](std::size_t i, auto &sink) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t cell = kOut;
      const auto ti = ab.index(angular_separation(u[i], u[j]));
      if (ti) {
        if (const auto zi = zb.index(redshift_separation(pos[i], pos[j])))
          cell = *ti * nz + *zi;
      }
      sink(cell);
      sink(cell);
    }
  };
  return run(Histogram::pairs3d(ab, zb, cfg.mode), n, row, cfg);
}

Histogram count_pairs_3d_cross(const GalaxyCatalog &d, const GalaxyCatalog &r,
                               const Binning &ab, const RedshiftBinning &zb,
                               const EngineConfig &cfg) {
  require_redshift(d, "data");
  require_redshift(r, "random");
  const auto ud = unit_vectors(d);
  const auto ur = unit_vectors(r);
  const auto pd = d.positions();
  const auto pr = r.positions();
  const std::size_t nz = zb.nbins();
  auto row = [&](std::size_t i, auto &sink) {
    for (std::size_t j = 0; j < ur.size(); ++j) {
      std::size_t cell = kOut;
      if (const auto ti = ab.index(angular_separation(ud[i], ur[j]))) {
        if (const auto zi = zb.index(redshift_separation(pd[i], pr[j])))
          cell = *ti * nz + *zi;
      }
      sink(cell);
    }
  };
  return run(Histogram::pairs3d(ab, zb, cfg.mode), ud.size(), row, cfg);
}

Histogram count_triplets_auto(const GalaxyCatalog &cat, const Binning3D &b3,
                              const EngineConfig &cfg) {
  const auto u = unit_vectors(cat);
  const std::size_t n = u.size();
  const std::size_t nb = b3.nbins();
  const auto bins = pair_bins(u, u, b3.per_angle);
  // Each unordered triple stands for its 3! orderings.
  auto row = [&](std::size_t i, auto &sink) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t bij = bins[i * n + j];
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::size_t cell = triplet_cell(bij, bins[j * n + k], bins[i * n + k], nb);
        for (int rep = 0; rep < 6; ++rep) sink(cell);
      }
    }
  };
  return run(Histogram::triplets(b3, cfg.mode), n, row, cfg);
}

Histogram count_triplets_cross(const GalaxyCatalog &two_from,
                               const GalaxyCatalog &one_from,
                               const Binning3D &b3, const EngineConfig &cfg) {
  const auto ua = unit_vectors(two_from);
  const auto ub = unit_vectors(one_from);
  const std::size_t na = ua.size();
  const std::size_t nb_pts = ub.size();
  const std::size_t nb = b3.nbins();
  const auto aa = pair_bins(ua, ua, b3.per_angle);
  const auto ab = pair_bins(ua, ub, b3.per_angle);
  // (i, j) and (j, i) from the first catalog form the same triangle with k.
  auto row = [&](std::size_t i, auto &sink) {
    for (std::size_t j = i + 1; j < na; ++j) {
      const std::size_t bij = aa[i * na + j];
      for (std::size_t k = 0; k < nb_pts; ++k) {
        const std::size_t cell =
            triplet_cell(bij, ab[i * nb_pts + k], ab[j * nb_pts + k], nb);
        sink(cell);
        sink(cell);
      }
    }
  };
  return run(Histogram::triplets(b3, cfg.mode), na, row, cfg);
}

} // namespace corrfn
