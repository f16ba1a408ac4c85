#include "corrfn/io.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <stdexcept>

namespace corrfn {

namespace {

json edges_json(const Histogram &h) {
  json axes = json::array();
  const std::size_t angular_axes = h.dims == 3 ? 3 : 1;
  for (std::size_t a = 0; a < angular_axes; ++a) axes.push_back(h.angular.edges_deg());
  return axes;
}

Binning binning_from(const json &edges, const std::string &scale) {
  const auto e = edges.get<std::vector<double>>();
  if (e.size() < 2) throw std::runtime_error("histogram file: axis needs >= 2 edges");
  return Binning::from_degrees(e.front(), e.back(), e.size() - 1,
                               parse_bin_scale(scale));
}

void copy_layout(json &j, const Histogram &h) {
  j["dims"] = h.dims;
  j["shape"] = h.shape;
  j["edges_deg"] = edges_json(h);
  j["scale"] = to_string(h.angular.scale());
  if (h.redshift) j["z_edges"] = h.redshift->edges();
}

} // namespace

json histogram_to_json(const Histogram &h, const json &manifest) {
  json j;
  copy_layout(j, h);
  j["counts"] = h.counts;
  j["total_evaluations"] = h.total_evaluations;
  j["in_range"] = h.in_range;
  j["mode"] = to_string(h.mode);
  j["manifest"] = manifest;
  return j;
}

Histogram histogram_from_json(const json &j) {
  try {
    Histogram h;
    h.dims = j.at("dims").get<int>();
    if (h.dims < 1 || h.dims > 3)
      throw std::runtime_error("dims must be 1, 2 or 3");
    h.shape = j.at("shape").get<std::vector<std::size_t>>();
    if (h.shape.size() != static_cast<std::size_t>(h.dims))
      throw std::runtime_error("shape length differs from dims");
    h.counts = j.at("counts").get<std::vector<std::uint64_t>>();
    std::size_t cells = 1;
    for (auto s : h.shape) cells *= s;
    if (cells != h.counts.size())
      throw std::runtime_error("counts length " + std::to_string(h.counts.size()) +
                               " does not match shape (" + std::to_string(cells) +
                               " cells)");
    h.total_evaluations = j.at("total_evaluations").get<std::uint64_t>();
    h.in_range = j.value("in_range", h.total_evaluations);
    h.mode = parse_count_mode(j.at("mode").get<std::string>());
    h.angular = binning_from(j.at("edges_deg").at(0), j.value("scale", "linear"));
    if (h.dims == 2) {
      const auto z = j.at("z_edges").get<std::vector<double>>();
      if (z.size() < 2) throw std::runtime_error("z_edges needs >= 2 entries");
      h.redshift = RedshiftBinning(z.front(), z.back(), z.size() - 1);
    }
    return h;
  } catch (const json::exception &e) {
    throw std::runtime_error(std::string("histogram file: ") + e.what());
  }
}

json estimator_to_json(const EstimatorResult &r, const Histogram &layout,
                       const std::string &name, const json &manifest) {
  json j;
  copy_layout(j, layout);
  j["estimator"] = name;
  json values = json::array();
  for (std::size_t i = 0; i < r.values.size(); ++i)
    values.push_back(r.valid[i] ? json(r.values[i]) : json(nullptr));
  j["values"] = std::move(values);
  j["valid"] = r.valid;
  j["n_real"] = r.n_real;
  j["n_random"] = r.n_random;
  j["manifest"] = manifest;
  return j;
}

json bench_report_to_json(const BenchReport &r) {
  const Workload &w = r.workload;
  json workload = {
      {"function", to_string(w.kind)},
      {"n", w.n},
      {"seed", w.seed},
      {"bins", w.binning.nbins()},
      {"theta_min_deg", rad_to_deg(w.binning.lo())},
      {"theta_max_deg", rad_to_deg(w.binning.hi())},
      {"scale", to_string(w.binning.scale())},
      {"mode", to_string(w.config.mode)},
      {"workers", w.config.workers},
      {"flush_interval", w.config.flush_interval},
      {"chunk", w.config.chunk},
  };
  if (w.zbinning) {
    workload["z_bins"] = w.zbinning->nbins();
    workload["z_max"] = w.zbinning->hi();
  }
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx",
                static_cast<unsigned long long>(r.counts_digest));
  return {
      {"workload", workload},     {"times_ms", r.times_ms},
      {"mean_ms", r.mean_ms},     {"std_ms", r.std_ms},
      {"counts_digest", digest},  {"in_range", r.in_range},
      {"environment", r.environment},
  };
}

BenchReport bench_report_from_json(const json &j) {
  try {
    BenchReport r;
    const auto &w = j.at("workload");
    r.workload.kind = parse_workload_kind(w.value("function", "pairs"));
    r.workload.n = w.at("n").get<std::size_t>();
    r.times_ms = j.value("times_ms", std::vector<double>{});
    r.mean_ms = j.at("mean_ms").get<double>();
    r.std_ms = j.value("std_ms", 0.0);
    r.in_range = j.value("in_range", std::uint64_t{0});
    r.environment = j.value("environment", "");
    return r;
  } catch (const json::exception &e) {
    throw std::runtime_error(std::string("bench report: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path &path, const json &j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << j.dump(1) << '\n';
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string file_digest(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::uint64_t h = 1469598103934665603ULL;
  for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
    h ^= static_cast<unsigned char>(*it);
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace corrfn
