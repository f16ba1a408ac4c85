#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "corrfn/bench.hpp"
#include "corrfn/estimators.hpp"
#include "corrfn/histogram.hpp"

namespace corrfn {

using json = nlohmann::json;

inline constexpr const char *kToolName = "corrfn";
inline constexpr const char *kToolVersion = "0.1.0";

/*
 * Histogram file:
 *   { "dims", "shape", "edges_deg": [[...] per angular axis], "z_edges"?,
 *     "scale", "counts": [row-major], "total_evaluations", "in_range",
 *     "mode", "manifest" }
 */
json histogram_to_json(const Histogram &h, const json &manifest = json::object());
Histogram histogram_from_json(const json &j);

/// Estimator file: values (null where invalid), valid flags, bin edges,
/// catalog sizes and manifest.
json estimator_to_json(const EstimatorResult &r, const Histogram &layout,
                       const std::string &name, const json &manifest = json::object());

json bench_report_to_json(const BenchReport &r);
/// Reads back the fields a baseline comparison needs.
BenchReport bench_report_from_json(const json &j);

json read_json_file(const std::filesystem::path &path);
/// Pretty-printed with sorted keys, newline-terminated.
void write_json_file(const std::filesystem::path &path, const json &j);

/// FNV-1a 64 of the file bytes, as "fnv1a64:<16 hex digits>".
std::string file_digest(const std::filesystem::path &path);

} // namespace corrfn
