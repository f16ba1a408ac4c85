#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corrfn/engine.hpp"
#include "corrfn/geometry.hpp"

namespace corrfn {

enum class WorkloadKind { Pairs, Pairs3D, Triplets };

std::string to_string(WorkloadKind kind);
WorkloadKind parse_workload_kind(const std::string &name);

/// An auto-correlation count over a seeded full-sky random catalog.
struct Workload {
  WorkloadKind kind = WorkloadKind::Pairs;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  Binning binning = Binning::full_range();
  /// Used by Pairs3D; a single bin over [0, 1] when unset.
  std::optional<RedshiftBinning> zbinning;
  EngineConfig config;
};

struct BenchSpec {
  Workload workload;
  std::size_t repeats = 5;
  std::size_t warmup = 1;
};

struct BenchReport {
  Workload workload;
  std::vector<double> times_ms;
  double mean_ms = 0.0;
  double std_ms = 0.0;
  /// FNV-1a over the counts of the last run; equal across runs in exact modes.
  std::uint64_t counts_digest = 0;
  std::uint64_t in_range = 0;
  std::string environment;
};

/// Mean and sample (n - 1) standard deviation.
std::pair<double, double> mean_and_std(std::span<const double> xs);

/// Untimed warmup calls, then `repeats` timed calls; milliseconds each.
std::vector<double> time_runs(const std::function<void()> &fn, std::size_t repeats,
                              std::size_t warmup);

/// Builds the catalog outside the timed region, then times the count.
BenchReport run_benchmark(const BenchSpec &spec);

/// baseline_ms / candidate_ms.
double speedup(double baseline_ms, double candidate_ms);
/// Two decimal places, the way the timing tables print ratios.
std::string format_ratio(double ratio);

/// Least-squares slope of log(time) against log(N).
double scaling_exponent(std::span<const std::pair<double, double>> points);

/// Plain-text table: Input Size | Mean +- Std (ms) [| Speedup]. Baseline
/// rows are matched to candidate rows by input size.
std::string render_table(std::span<const BenchReport> reports,
                         std::span<const BenchReport> baseline = {});

std::uint64_t fnv1a64(std::span<const std::uint64_t> words);

} // namespace corrfn
