// corrfn: command-line driver for pair/triplet counting, correlation
// estimators, oracle verification, benchmarks and the float32 stress test.
//
// Exit status: 0 success, 1 runtime or verification failure, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "corrfn/bench.hpp"
#include "corrfn/catalog.hpp"
#include "corrfn/engine.hpp"
#include "corrfn/estimators.hpp"
#include "corrfn/io.hpp"
#include "corrfn/oracle.hpp"

using namespace corrfn;

namespace {

/// Precondition violations detected after flag parsing; exit status 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct BinningOptions {
  std::size_t bins = 64;
  double theta_min = 0.0;
  double theta_max = 180.0;
  std::string scale = "linear";
  std::size_t z_bins = 1;
  std::optional<double> z_max;

  void add_to(CLI::App &app) {
    app.add_option("--bins", bins, "Angular bins per axis")->check(CLI::PositiveNumber);
    app.add_option("--theta-min", theta_min, "Lower angular edge (degrees)");
    app.add_option("--theta-max", theta_max, "Upper angular edge (degrees)");
    app.add_option("--scale", scale, "Bin scale")->check(CLI::IsMember({"linear", "log"}));
    app.add_option("--z-bins", z_bins, "Redshift-difference bins (pairs3d)")
        ->check(CLI::PositiveNumber);
    app.add_option("--z-max", z_max, "Upper redshift-difference edge (pairs3d)");
  }

  Binning angular() const {
    try {
      return Binning::from_degrees(theta_min, theta_max, bins, parse_bin_scale(scale));
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
  }

  // Without --z-max the single default range covers every possible
  // difference: since z >= 0, |z_a - z_b| <= max z.
  RedshiftBinning redshift(std::initializer_list<const GalaxyCatalog *> cats) const {
    double hi = z_max.value_or(0.0);
    if (!z_max) {
      for (const auto *c : cats)
        if (c)
          for (const auto &p : c->positions()) hi = std::max(hi, p.z);
      if (hi == 0.0) hi = 1.0;
    }
    try {
      return RedshiftBinning(0.0, hi, z_bins);
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
  }

  json to_json(bool with_z, const std::optional<RedshiftBinning> &zb) const {
    json j = {{"bins", bins}, {"theta_min_deg", theta_min},
              {"theta_max_deg", theta_max}, {"scale", scale}};
    if (with_z && zb) {
      j["z_bins"] = zb->nbins();
      j["z_max"] = zb->hi();
    }
    return j;
  }
};

struct EngineOptions {
  std::string mode = "u64";
  std::size_t workers = 1;
  std::optional<std::uint64_t> flush;
  std::size_t chunk = 1024;

  void add_to(CLI::App &app) {
    app.add_option("--mode", mode, "Count representation")
        ->check(CLI::IsMember({"u64", "f64", "f32-std", "f32-recycle"}));
    app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--flush", flush, "Evaluations between flushes (f32-recycle)")
        ->check(CLI::PositiveNumber);
    app.add_option("--chunk", chunk, "Outer-loop rows per work unit")
        ->check(CLI::PositiveNumber);
  }

  EngineConfig config() const {
    EngineConfig cfg{workers, parse_count_mode(mode), flush.value_or(kF32ConsecutiveLimit),
                     chunk};
    try {
      cfg.validate();
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
    return cfg;
  }

  // Worker count and chunking only influence f32-std results, so they are
  // recorded only there; exact-mode outputs stay byte-identical.
  json to_json() const {
    const EngineConfig cfg = config();
    json j = {{"mode", mode}};
    if (cfg.mode == CountMode::F32Recycling) j["flush_interval"] = cfg.flush_interval;
    if (!is_exact(cfg.mode)) {
      j["workers"] = workers;
      j["chunk"] = chunk;
    }
    return j;
  }
};

json make_manifest(const std::string &subcommand, json config, json inputs, json seeds) {
  return {{"tool", kToolName},       {"version", kToolVersion},
          {"subcommand", subcommand}, {"config", std::move(config)},
          {"inputs", std::move(inputs)}, {"seeds", std::move(seeds)}};
}

// D and R catalogs for count/estimate, from files or generated.
struct CatalogSources {
  std::string data_path;
  std::string random_path;
  std::optional<std::size_t> random_n;
  std::uint64_t seed = 1;

  void add_to(CLI::App &app) {
    app.add_option("--data", data_path, "Data catalog CSV (D)");
    app.add_option("--random", random_path, "Random catalog CSV (R)");
    app.add_option("--random-n", random_n, "Generate R with this many points");
    app.add_option("--seed", seed, "Seed for generated catalogs");
  }

  bool has_random() const { return !random_path.empty() || random_n.has_value(); }

  GalaxyCatalog data(bool need_z) const {
    if (data_path.empty()) throw UsageError("--data is required");
    return load_catalog(data_path, need_z).with_label("D");
  }

  GalaxyCatalog random(bool need_z, std::optional<double> z_max) const {
    if (!random_path.empty()) return load_catalog(random_path, need_z).with_label("R");
    if (!random_n) throw UsageError("a random catalog is required: pass --random or --random-n");
    return generate_random_catalog(*random_n, SkyRegion::full_sky(), need_z,
                                   z_max.value_or(1.0), seed);
  }

  json inputs(const GalaxyCatalog *d, const GalaxyCatalog *r) const {
    json out = json::array();
    if (d) out.push_back({{"role", "D"}, {"path", data_path},
                          {"digest", file_digest(data_path)}, {"size", d->size()}});
    if (r) {
      json entry = {{"role", "R"}, {"size", r->size()}};
      if (!random_path.empty()) {
        entry["path"] = random_path;
        entry["digest"] = file_digest(random_path);
      } else {
        entry["generator"] = r->source();
      }
      out.push_back(entry);
    }
    return out;
  }

  json seeds() const {
    return random_path.empty() && random_n ? json{{"random", seed}} : json::object();
  }
};

bool valid_which(const std::string &kind, const std::string &which) {
  if (kind == "triplets") return which == "ddd" || which == "ddr" || which == "drr" || which == "rrr";
  return which == "dd" || which == "dr" || which == "rr";
}

// Runs one of DD/DR/RR/DDD/DDR/DRR/RRR.
Histogram count_which(const std::string &kind, const std::string &which,
                      const GalaxyCatalog *d, const GalaxyCatalog *r, const Binning &b,
                      const std::optional<RedshiftBinning> &zb, const EngineConfig &cfg) {
  if (kind == "triplets") {
    const Binning3D b3{b};
    if (which == "ddd") return count_triplets_auto(*d, b3, cfg);
    if (which == "rrr") return count_triplets_auto(*r, b3, cfg);
    if (which == "ddr") return count_triplets_cross(*d, *r, b3, cfg);
    return count_triplets_cross(*r, *d, b3, cfg);
  }
  const bool z = kind == "pairs3d";
  if (which == "dd") return z ? count_pairs_3d_auto(*d, b, *zb, cfg) : count_pairs_auto(*d, b, cfg);
  if (which == "rr") return z ? count_pairs_3d_auto(*r, b, *zb, cfg) : count_pairs_auto(*r, b, cfg);
  return z ? count_pairs_3d_cross(*d, *r, b, *zb, cfg) : count_pairs_cross(*d, *r, b, cfg);
}

// ---------------------------------------------------------------- count

struct CountCommand {
  std::string kind;
  std::string which;
  std::string out;
  CatalogSources sources;
  BinningOptions binning;
  EngineOptions engine;

  void add_to(CLI::App &app) {
    auto *sub = app.add_subcommand("count", "Count pairs or triplets into a histogram");
    sub->add_option("kind", kind, "pairs | pairs3d | triplets")
        ->required()->check(CLI::IsMember({"pairs", "pairs3d", "triplets"}));
    sub->add_option("--which", which, "dd|dr|rr or ddd|ddr|drr|rrr")->required();
    sub->add_option("--out", out, "Histogram JSON output")->required();
    sources.add_to(*sub);
    binning.add_to(*sub);
    engine.add_to(*sub);
    sub->callback([this] { run(); });
  }

  void run() {
    if (!valid_which(kind, which))
      throw UsageError("--which " + which + " is not valid for " + kind);
    const bool need_d = which.find('d') != std::string::npos;
    const bool need_r = which.find('r') != std::string::npos;
    if (need_d && sources.data_path.empty()) throw UsageError("--which " + which + " requires --data");
    if (need_r && !sources.has_random())
      throw UsageError("--which " + which + " requires --random or --random-n");
    const Binning b = binning.angular();
    const EngineConfig cfg = engine.config();
    const bool z = kind == "pairs3d";

    std::optional<GalaxyCatalog> d, r;
    if (need_d) d = sources.data(z);
    if (need_r) r = sources.random(z, binning.z_max);
    std::optional<RedshiftBinning> zb;
    if (z) zb = binning.redshift({d ? &*d : nullptr, r ? &*r : nullptr});

    const Histogram h = count_which(kind, which, d ? &*d : nullptr, r ? &*r : nullptr, b, zb, cfg);

    json config = binning.to_json(z, zb);
    config.update(engine.to_json());
    config["which"] = which;
    json manifest = make_manifest("count " + kind, config,
                                  sources.inputs(d ? &*d : nullptr, r ? &*r : nullptr),
                                  sources.seeds());
    manifest["catalog_sizes"] = json::object();
    if (d) manifest["catalog_sizes"]["data"] = d->size();
    if (r) manifest["catalog_sizes"]["random"] = r->size();
    write_json_file(out, histogram_to_json(h, manifest));
    std::cout << which << ": " << h.in_range << " of " << h.total_evaluations
              << " evaluations in range, " << h.sum() << " counted -> " << out << '\n';
  }
};

// ------------------------------------------------------------- estimate

struct EstimateCommand {
  std::string kind;
  std::string out;
  std::string dd, dr, rr, ddd, ddr, drr, rrr;
  std::optional<std::uint64_t> n_real, n_random;
  CatalogSources sources;
  BinningOptions binning;
  EngineOptions engine;

  void add_to(CLI::App &app) {
    auto *sub = app.add_subcommand("estimate", "Compute w(theta), w(theta, dz) or zeta");
    sub->add_option("kind", kind, "2pacf | 2p3dcf | 3pacf")
        ->required()->check(CLI::IsMember({"2pacf", "2p3dcf", "3pacf"}));
    sub->add_option("--out", out, "Estimator JSON output")->required();
    for (auto [flag, target] : {std::pair{"--dd", &dd}, {"--dr", &dr}, {"--rr", &rr},
                                {"--ddd", &ddd}, {"--ddr", &ddr}, {"--drr", &drr},
                                {"--rrr", &rrr}})
      sub->add_option(flag, *target, "Histogram file from `count`");
    sub->add_option("--n-real", n_real, "Data catalog size");
    sub->add_option("--n-random", n_random, "Random catalog size");
    sources.add_to(*sub);
    binning.add_to(*sub);
    engine.add_to(*sub);
    sub->callback([this] { run(); });
  }

  std::vector<std::string> histogram_files() const {
    if (kind == "3pacf") return {ddd, ddr, drr, rrr};
    return {dd, dr, rr};
  }

  void run() {
    const auto files = histogram_files();
    const bool from_files = std::any_of(files.begin(), files.end(),
                                        [](const auto &f) { return !f.empty(); });
    std::vector<Histogram> hists;
    json manifest;
    std::uint64_t nd = 0, nr = 0;

    if (from_files) {
      static const std::vector<std::string> pair_names{"dd", "dr", "rr"};
      static const std::vector<std::string> triplet_names{"ddd", "ddr", "drr", "rrr"};
      const auto &names = kind == "3pacf" ? triplet_names : pair_names;
      std::vector<json> docs;
      json inputs = json::array();
      for (std::size_t i = 0; i < files.size(); ++i) {
        if (files[i].empty()) throw UsageError("--" + names[i] + " is required");
        docs.push_back(read_json_file(files[i]));
        hists.push_back(histogram_from_json(docs.back()));
        inputs.push_back({{"role", names[i]}, {"path", files[i]},
                          {"digest", file_digest(files[i])}});
      }
      auto size_from = [&](std::size_t doc, const char *key) -> std::optional<std::uint64_t> {
        const auto &m = docs[doc].value("manifest", json::object());
        if (m.contains("catalog_sizes") && m["catalog_sizes"].contains(key))
          return m["catalog_sizes"][key].get<std::uint64_t>();
        return std::nullopt;
      };
      const auto nd_opt = n_real ? n_real : size_from(0, "data");
      const auto nr_opt = n_random ? n_random : size_from(docs.size() - 1, "random");
      if (!nd_opt || !nr_opt)
        throw UsageError("catalog sizes unknown: pass --n-real and --n-random");
      nd = *nd_opt;
      nr = *nr_opt;
      manifest = make_manifest("estimate " + kind, {{"source", "histograms"}}, inputs,
                               json::object());
    } else {
      if (!sources.has_random()) throw UsageError("end-to-end estimate requires --random or --random-n");
      const bool z = kind == "2p3dcf";
      const Binning b = binning.angular();
      const EngineConfig cfg = engine.config();
      const GalaxyCatalog d = sources.data(z);
      const GalaxyCatalog r = sources.random(z, binning.z_max);
      std::optional<RedshiftBinning> zb;
      if (z) zb = binning.redshift({&d, &r});
      const std::string count_kind = kind == "3pacf" ? "triplets" : z ? "pairs3d" : "pairs";
      const std::vector<std::string> whiches =
          kind == "3pacf" ? std::vector<std::string>{"ddd", "ddr", "drr", "rrr"}
                          : std::vector<std::string>{"dd", "dr", "rr"};
      for (const auto &w : whiches) hists.push_back(count_which(count_kind, w, &d, &r, b, zb, cfg));
      nd = d.size();
      nr = r.size();
      json config = binning.to_json(z, zb);
      config.update(engine.to_json());
      manifest = make_manifest("estimate " + kind, config, sources.inputs(&d, &r), sources.seeds());
    }
    if (nd < 1 || nr < 1) throw UsageError("catalog sizes must be >= 1");

    for (std::size_t i = 1; i < hists.size(); ++i) {
      if (auto msg = shape_mismatch(hists[0], hists[i]); !msg.empty())
        throw std::runtime_error("histogram shape mismatch between input 1 and input " +
                                 std::to_string(i + 1) + ": " + msg);
    }
    const int want_dims = kind == "2pacf" ? 1 : kind == "2p3dcf" ? 2 : 3;
    if (hists[0].dims != want_dims)
      throw std::runtime_error(kind + " needs " + std::to_string(want_dims) +
                               "-dimensional histograms, got " + std::to_string(hists[0].dims));

    EstimatorResult result;
    if (kind == "2pacf") result = landy_szalay_2pacf(hists[0], hists[1], hists[2], nd, nr);
    else if (kind == "2p3dcf") result = estimate_2p3dcf(hists[0], hists[1], hists[2], nd, nr);
    else result = estimate_3pacf(hists[0], hists[1], hists[2], hists[3], nd, nr);

    write_json_file(out, estimator_to_json(result, hists.back(), kind, manifest));
    std::cout << kind << ": " << result.valid_count() << " of " << result.values.size()
              << " bins valid -> " << out << '\n';
  }
};

// --------------------------------------------------------------- verify

struct VerifyCommand {
  std::string kind;
  std::size_t n = 0;
  std::optional<std::size_t> random_n;
  std::uint64_t seed = 1;
  std::string which;
  bool degenerate = false;
  BinningOptions binning;
  EngineOptions engine;

  void add_to(CLI::App &app) {
    auto *sub = app.add_subcommand("verify", "Check the engine against brute-force enumeration");
    sub->add_option("kind", kind, "pairs | pairs3d | triplets")
        ->required()->check(CLI::IsMember({"pairs", "pairs3d", "triplets"}));
    sub->add_option("--n", n, "Data catalog size")->required();
    sub->add_option("--random-n", random_n, "Random catalog size (default: --n)");
    sub->add_option("--seed", seed, "Catalog seed");
    sub->add_option("--which", which, "Histogram to verify (default dd / ddd)");
    sub->add_flag("--degenerate", degenerate, "Put every data point at one position");
    binning.add_to(*sub);
    engine.add_to(*sub);
    sub->callback([this] { throw_if_mismatch(); });
  }

  std::uint64_t evaluations(std::uint64_t nd, std::uint64_t nr) const {
    if (which == "dd") return auto_pair_evaluations(nd);
    if (which == "rr") return auto_pair_evaluations(nr);
    if (which == "dr") return nd * nr;
    if (which == "ddd") return auto_triplet_evaluations(nd);
    if (which == "rrr") return auto_triplet_evaluations(nr);
    if (which == "ddr") return cross_triplet_evaluations(nd, nr);
    return cross_triplet_evaluations(nr, nd);
  }

  void throw_if_mismatch() {
    if (which.empty()) which = kind == "triplets" ? "ddd" : "dd";
    if (!valid_which(kind, which))
      throw UsageError("--which " + which + " is not valid for " + kind);
    const std::size_t m = random_n.value_or(n);
    const std::uint64_t evals = evaluations(n, m);
    if (evals > kOracleGuard)
      throw UsageError("oracle guard exceeded: " + std::to_string(evals) +
                       " evaluations > " + std::to_string(kOracleGuard));

    const bool z = kind == "pairs3d";
    const double z_gen = binning.z_max.value_or(1.0);
    const GalaxyCatalog data =
        degenerate && n > 0
            ? generate_degenerate_catalog(n, 45.0, 45.0,
                                          z ? std::optional<double>(0.5) : std::nullopt)
            : generate_random_catalog(n, SkyRegion::full_sky(), z, z_gen, seed);
    const GalaxyCatalog r = generate_random_catalog(m, SkyRegion::full_sky(), z, z_gen, seed + 1);
    const Binning b = binning.angular();
    std::optional<RedshiftBinning> zb;
    if (z) zb = binning.redshift({&data, &r});

    const Histogram got = count_which(kind, which, &data, &r, b, zb, engine.config());
    OracleReport ref = [&] {
      if (kind == "triplets") {
        const Binning3D b3{b};
        if (which == "ddd") return oracle_triplets(data, b3);
        if (which == "rrr") return oracle_triplets(r, b3);
        if (which == "ddr") return oracle_triplets(data, r, b3);
        return oracle_triplets(r, data, b3);
      }
      if (z) {
        if (which == "dd") return oracle_pairs(data, b, *zb);
        if (which == "rr") return oracle_pairs(r, b, *zb);
        return oracle_pairs(data, r, b, *zb);
      }
      if (which == "dd") return oracle_pairs(data, b);
      if (which == "rr") return oracle_pairs(r, b);
      return oracle_pairs(data, r, b);
    }();

    if (ref.compare(got)) {
      std::cout << "verify " << kind << " " << which << ": match (" << got.size() << " bins, "
                << ref.histogram.total_evaluations << " evaluations, mode "
                << to_string(got.mode) << ")\n";
      return;
    }
    const auto &mm = *ref.mismatch;
    std::ostringstream msg;
    msg << "verify " << kind << " " << which << ": MISMATCH in bin " << mm.index
        << ": expected " << mm.expected << ", got " << mm.got << " (" << mm.count
        << " bins differ, mode " << to_string(got.mode) << ")";
    throw std::runtime_error(msg.str());
  }
};

// ---------------------------------------------------------------- bench

struct BenchCommand {
  std::string workload = "pairs";
  std::vector<std::size_t> sizes;
  std::size_t repeats = 5;
  std::size_t warmup = 1;
  std::uint64_t seed = 1;
  std::string out;
  std::string baseline;
  BinningOptions binning;
  EngineOptions engine;

  void add_to(CLI::App &app) {
    auto *sub = app.add_subcommand("bench", "Time counting workloads");
    sub->add_option("--workload", workload, "pairs | pairs3d | triplets")
        ->check(CLI::IsMember({"pairs", "pairs3d", "triplets"}));
    sub->add_option("--sizes", sizes, "Comma-separated catalog sizes")
        ->required()->delimiter(',');
    sub->add_option("--repeats", repeats, "Timed runs per size");
    sub->add_option("--warmup", warmup, "Untimed runs per size");
    sub->add_option("--seed", seed, "Catalog seed");
    sub->add_option("--out", out, "Report JSON output")->required();
    sub->add_option("--baseline", baseline, "Earlier report to compute speedups against");
    binning.add_to(*sub);
    engine.add_to(*sub);
    sub->callback([this] { run(); });
  }

  void run() {
    if (repeats < 2) throw UsageError("--repeats must be >= 2 so a standard deviation exists");
    std::vector<BenchReport> base;
    if (!baseline.empty()) {
      const auto j = read_json_file(baseline);
      for (const auto &r : j.at("reports")) base.push_back(bench_report_from_json(r));
    }
    const Binning b = binning.angular();
    const EngineConfig cfg = engine.config();

    std::vector<BenchReport> reports;
    json list = json::array();
    for (std::size_t n : sizes) {
      BenchSpec spec;
      spec.workload = {parse_workload_kind(workload), n, seed, b, std::nullopt, cfg};
      if (spec.workload.kind == WorkloadKind::Pairs3D)
        spec.workload.zbinning = RedshiftBinning(0.0, binning.z_max.value_or(1.0), binning.z_bins);
      spec.repeats = repeats;
      spec.warmup = warmup;
      reports.push_back(run_benchmark(spec));
      list.push_back(bench_report_to_json(reports.back()));
    }
    json config = binning.to_json(false, std::nullopt);
    config.update(engine.to_json());
    config["workers"] = engine.workers;
    config.update({{"workload", workload}, {"repeats", repeats}, {"warmup", warmup}});
    json inputs = json::array();
    if (!baseline.empty())
      inputs.push_back({{"role", "baseline"}, {"path", baseline}, {"digest", file_digest(baseline)}});
    write_json_file(out, {{"reports", list},
                          {"manifest", make_manifest("bench", config, inputs, {{"catalog", seed}})}});
    std::cout << render_table(reports, base);
  }
};

// ----------------------------------------------------- stress-precision

struct StressCommand {
  std::size_t n = 8192;
  std::size_t workers = 1;
  std::string out;

  void add_to(CLI::App &app) {
    auto *sub = app.add_subcommand(
        "stress-precision", "Degenerate catalog: compare f32-std, f32-recycle and u64 counts");
    sub->add_option("--n", n, "Degenerate catalog size")->required();
    sub->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out", out, "Optional JSON report");
    sub->callback([this] { run(); });
  }

  void run() {
    const Binning b = Binning::full_range();
    const GalaxyCatalog cat = n == 0 ? GalaxyCatalog{} : generate_degenerate_catalog(n, 45.0, 45.0);
    const std::uint64_t expected = auto_pair_evaluations(n);
    json rows = json::array();
    std::printf("%-12s %16s %16s %10s\n", "Mode", "Zero-bin count", "Expected", "Loss (%)");
    for (CountMode mode : {CountMode::F32Standard, CountMode::F32Recycling, CountMode::U64Exact}) {
      const Histogram h = count_pairs_auto(cat, b, {workers, mode});
      const std::uint64_t got = h.counts[0];
      const double loss =
          expected == 0 ? 0.0 : 100.0 * static_cast<double>(expected - got) / static_cast<double>(expected);
      std::printf("%-12s %16llu %16llu %10.4f\n", to_string(mode).c_str(),
                  static_cast<unsigned long long>(got), static_cast<unsigned long long>(expected),
                  loss);
      rows.push_back({{"mode", to_string(mode)}, {"zero_bin", got}, {"expected", expected},
                      {"loss_percent", loss}});
    }
    if (!out.empty()) {
      json config = {{"n", n}, {"workers", workers}, {"bins", b.nbins()}};
      write_json_file(out, {{"results", rows},
                            {"manifest", make_manifest("stress-precision", config,
                                                       json::array(), json::object())}});
    }
  }
};

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"corrfn: parallel 2PACF / 2P3DCF / 3PACF counting toolkit"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  CountCommand count;
  EstimateCommand estimate;
  VerifyCommand verify;
  BenchCommand bench;
  StressCommand stress;
  count.add_to(app);
  estimate.add_to(app);
  verify.add_to(app);
  bench.add_to(app);
  stress.add_to(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
