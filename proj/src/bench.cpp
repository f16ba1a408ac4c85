#include "corrfn/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "corrfn/catalog.hpp"

namespace corrfn {

std::string to_string(WorkloadKind kind) {
  switch (kind) {
  case WorkloadKind::Pairs: return "pairs";
  case WorkloadKind::Pairs3D: return "pairs3d";
  case WorkloadKind::Triplets: return "triplets";
  }
  return "unknown";
}

WorkloadKind parse_workload_kind(const std::string &name) {
  if (name == "pairs") return WorkloadKind::Pairs;
  if (name == "pairs3d") return WorkloadKind::Pairs3D;
  if (name == "triplets") return WorkloadKind::Triplets;
  throw std::invalid_argument("unknown workload '" + name + "'");
}

std::pair<double, double> mean_and_std(std::span<const double> xs) {
  if (xs.empty()) return {0.0, 0.0};
  const double n = static_cast<double>(xs.size());
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

std::vector<double> time_runs(const std::function<void()> &fn, std::size_t repeats,
                              std::size_t warmup) {
  using clock = std::chrono::steady_clock;
  for (std::size_t i = 0; i < warmup; ++i) fn();
  std::vector<double> times;
  times.reserve(repeats);
  for (std::size_t i = 0; i < repeats; ++i) {
    const auto start = clock::now();
    fn();
    const std::chrono::duration<double, std::milli> elapsed = clock::now() - start;
    times.push_back(elapsed.count());
  }
  return times;
}

BenchReport run_benchmark(const BenchSpec &spec) {
  if (spec.repeats < 2)
    throw std::invalid_argument("benchmark needs repeats >= 2 for a standard deviation");
  const Workload &w = spec.workload;
  w.config.validate();

  const bool with_z = w.kind == WorkloadKind::Pairs3D;
  const GalaxyCatalog cat =
      generate_random_catalog(w.n, SkyRegion::full_sky(), with_z, 1.0, w.seed);
  const RedshiftBinning zb = w.zbinning.value_or(RedshiftBinning(0.0, 1.0, 1));

  Histogram last;
  std::size_t run_index = 0;
  auto once = [&] {
    try {
      switch (w.kind) {
      case WorkloadKind::Pairs:
        last = count_pairs_auto(cat, w.binning, w.config);
        break;
      case WorkloadKind::Pairs3D:
        last = count_pairs_3d_auto(cat, w.binning, zb, w.config);
        break;
      case WorkloadKind::Triplets:
        last = count_triplets_auto(cat, Binning3D{w.binning}, w.config);
        break;
      }
    } catch (const std::exception &e) {
      throw std::runtime_error("benchmark run " + std::to_string(run_index) +
                               " failed: " + e.what());
    }
    ++run_index;
  };

  BenchReport report;
  report.workload = w;
  report.times_ms = time_runs(once, spec.repeats, spec.warmup);
  std::tie(report.mean_ms, report.std_ms) = mean_and_std(report.times_ms);
  report.counts_digest = fnv1a64(last.counts);
  report.in_range = last.in_range;
  report.environment = "workers=" + std::to_string(w.config.workers) +
                       " mode=" + to_string(w.config.mode) +
                       " hardware_threads=" +
                       std::to_string(std::thread::hardware_concurrency());
  return report;
}

double speedup(double baseline_ms, double candidate_ms) {
  if (!(baseline_ms > 0.0) || !(candidate_ms > 0.0))
    throw std::invalid_argument("speedup needs positive times");
  return baseline_ms / candidate_ms;
}

std::string format_ratio(double ratio) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", ratio);
  return buf;
}

double scaling_exponent(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3)
    throw std::invalid_argument("scaling fit needs at least 3 points");
  double sx = 0.0, sy = 0.0;
  for (const auto &[n, t] : points) {
    if (!(n > 0.0) || !(t > 0.0))
      throw std::invalid_argument("scaling fit needs positive sizes and times");
    sx += std::log(n);
    sy += std::log(t);
  }
  const double m = static_cast<double>(points.size());
  const double mx = sx / m;
  const double my = sy / m;
  double sxx = 0.0, sxy = 0.0;
  for (const auto &[n, t] : points) {
    const double dx = std::log(n) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(t) - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("scaling fit needs distinct sizes");
  return sxy / sxx;
}

std::string render_table(std::span<const BenchReport> reports,
                         std::span<const BenchReport> baseline) {
  auto mean_std = [](const BenchReport &r) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(0) << r.mean_ms << " ± " << r.std_ms;
    if (r.mean_ms < 100.0) {
      s.str("");
      s << std::fixed << std::setprecision(2) << r.mean_ms << " ± " << r.std_ms;
    }
    return s.str();
  };

  std::ostringstream out;
  const bool with_speedup = !baseline.empty();
  out << std::left << std::setw(14) << "Input Size";
  if (with_speedup) out << std::setw(28) << "Mean ± Std (ms)" << "Speedup";
  else out << "Mean ± Std (ms)";
  out << '\n';
  for (const auto &r : reports) {
    out << std::left << std::setw(14) << r.workload.n;
    if (!with_speedup) {
      out << mean_std(r) << '\n';
      continue;
    }
    // setw counts bytes; the UTF-8 '±' is two, in header and rows alike.
    out << std::setw(28) << mean_std(r);
    std::string cell = "-";
    for (const auto &b : baseline)
      if (b.workload.n == r.workload.n) cell = format_ratio(speedup(b.mean_ms, r.mean_ms));
    out << cell << '\n';
  }
  return out.str();
}

std::uint64_t fnv1a64(std::span<const std::uint64_t> words) {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint64_t w : words)
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (w >> (8 * byte)) & 0xffu;
      h *= 1099511628211ULL;
    }
  return h;
}

} // namespace corrfn
