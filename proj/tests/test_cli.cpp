#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "corrfn/bench.hpp"
#include "corrfn/catalog.hpp"
#include "corrfn/io.hpp"
#include "test_support.hpp"

using namespace corrfn;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli {
public:
  Cli() {
    save_catalog(generate_random_catalog(300, SkyRegion::full_sky(), false, 0, 11),
                 dir_.path() / "d.csv");
    save_catalog(generate_random_catalog(250, SkyRegion::full_sky(), false, 0, 12),
                 dir_.path() / "r.csv");
    save_catalog(generate_random_catalog(200, SkyRegion::full_sky(), true, 0.8, 13),
                 dir_.path() / "dz.csv");
    save_catalog(generate_random_catalog(40, SkyRegion::full_sky(), false, 0, 14),
                 dir_.path() / "small.csv");
  }

  std::string path(const std::string &name) const { return (dir_.path() / name).string(); }

  RunResult run(const std::string &args) const {
    const auto out = dir_.path() / "stdout.txt";
    const auto err = dir_.path() / "stderr.txt";
    const std::string cmd = std::string(CORRFN_CLI) + " " + args + " >" + out.string() +
                            " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
  }

  json read(const std::string &name) const { return read_json_file(path(name)); }
  std::string bytes(const std::string &name) const { return slurp(path(name)); }

private:
  TempDir dir_;
};

} // namespace

TEST_CASE("count pairs writes a conserving histogram") {
  Cli cli;
  const auto r = cli.run("count pairs --data " + cli.path("d.csv") +
                         " --which dd --bins 64 --theta-min 0 --theta-max 180 --mode u64"
                         " --workers 4 --out " + cli.path("dd.json"));
  REQUIRE(r.status == 0);
  const auto j = cli.read("dd.json");
  CHECK(j.at("counts").size() == 64);
  std::uint64_t sum = 0;
  for (const auto &c : j.at("counts")) sum += c.get<std::uint64_t>();
  CHECK(sum == 300u * 299u);
  CHECK(j.at("dims") == 1);
  CHECK(j.at("edges_deg")[0].size() == 65);
  CHECK(j.at("manifest").at("catalog_sizes").at("data") == 300);
  CHECK(j.at("manifest").at("inputs")[0].at("digest").get<std::string>().rfind("fnv1a64:", 0) == 0);

  SUBCASE("f32-recycle yields byte-identical counts") {
    REQUIRE(cli.run("count pairs --data " + cli.path("d.csv") +
                    " --which dd --mode f32-recycle --flush 1000 --workers 4 --chunk 8 --out " +
                    cli.path("dd32.json")).status == 0);
    CHECK(cli.read("dd32.json").at("counts").dump() == j.at("counts").dump());
  }
}

TEST_CASE("count usage errors exit 2") {
  Cli cli;
  CHECK(cli.run("count pairs --data " + cli.path("d.csv") + " --which dr --out " +
                cli.path("x.json")).status == 2);
  CHECK(cli.run("count pairs --data " + cli.path("d.csv") + " --which ddd --out " +
                cli.path("x.json")).status == 2);
  CHECK(cli.run("count pairs --data " + cli.path("d.csv") +
                " --which dd --mode f16 --out " + cli.path("x.json")).status == 2);
  CHECK(cli.run("count pairs --data " + cli.path("d.csv") +
                " --which dd --theta-max 200 --out " + cli.path("x.json")).status == 2);
  CHECK(cli.run("count --which dd").status == 2);
  CHECK(cli.run("frobnicate").status == 2);
  CHECK(cli.run("--help").status == 0);
}

TEST_CASE("count runtime errors exit 1") {
  Cli cli;
  const auto r = cli.run("count pairs --data " + cli.path("missing.csv") +
                         " --which dd --out " + cli.path("x.json"));
  CHECK(r.status == 1);
  CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("count with a generated random catalog") {
  Cli cli;
  REQUIRE(cli.run("count pairs --which rr --random-n 120 --seed 3 --out " +
                  cli.path("rr.json")).status == 0);
  const auto j = cli.read("rr.json");
  CHECK(j.at("manifest").at("catalog_sizes").at("random") == 120);
  CHECK(j.at("manifest").at("seeds").at("random") == 3);
  CHECK(j.at("in_range") == 120 * 119);
}

TEST_CASE("exact-mode files are byte-identical across workers and reruns") {
  Cli cli;
  const std::string base = "count pairs --data " + cli.path("d.csv") + " --random " +
                           cli.path("r.csv") + " --which dr --mode u64 --chunk 16 ";
  for (int w : {1, 2, 8})
    REQUIRE(cli.run(base + "--workers " + std::to_string(w) + " --out " +
                    cli.path("w" + std::to_string(w) + ".json")).status == 0);
  REQUIRE(cli.run(base + "--workers 1 --out " + cli.path("again.json")).status == 0);
  CHECK(cli.bytes("w1.json") == cli.bytes("w2.json"));
  CHECK(cli.bytes("w1.json") == cli.bytes("w8.json"));
  CHECK(cli.bytes("w1.json") == cli.bytes("again.json"));
}

TEST_CASE("estimate 2pacf from histogram files") {
  Cli cli;
  REQUIRE(cli.run("count pairs --data " + cli.path("d.csv") + " --which dd --out " +
                  cli.path("dd.json")).status == 0);
  const std::string f = cli.path("dd.json");
  const auto r = cli.run("estimate 2pacf --dd " + f + " --dr " + f + " --rr " + f +
                         " --n-real 300 --n-random 300 --out " + cli.path("w.json"));
  REQUIRE(r.status == 0);
  const auto j = cli.read("w.json");
  std::size_t valid = 0;
  for (std::size_t i = 0; i < j.at("values").size(); ++i) {
    if (!j.at("valid")[i].get<bool>()) {
      CHECK(j.at("values")[i].is_null());
      continue;
    }
    ++valid;
    CHECK(j.at("values")[i].get<double>() == 0.0);
  }
  CHECK(valid > 0);
  CHECK(j.at("estimator") == "2pacf");

  SUBCASE("sizes inferred from the manifests") {
    CHECK(cli.run("estimate 2pacf --dd " + f + " --dr " + f + " --rr " + f + " --out " +
                  cli.path("w2.json")).status == 2); // dd file has no random size
    REQUIRE(cli.run("count pairs --which rr --random-n 300 --out " + cli.path("rr.json")).status == 0);
    REQUIRE(cli.run("estimate 2pacf --dd " + f + " --dr " + f + " --rr " + cli.path("rr.json") +
                    " --out " + cli.path("w3.json")).status == 0);
    CHECK(cli.read("w3.json").at("n_real") == 300);
    CHECK(cli.read("w3.json").at("n_random") == 300);
  }
}

TEST_CASE("estimate reports shape mismatches with the axis") {
  Cli cli;
  REQUIRE(cli.run("count pairs --data " + cli.path("d.csv") + " --which dd --bins 64 --out " +
                  cli.path("a.json")).status == 0);
  REQUIRE(cli.run("count pairs --data " + cli.path("d.csv") + " --which dd --bins 32 --out " +
                  cli.path("b.json")).status == 0);
  const auto r = cli.run("estimate 2pacf --dd " + cli.path("a.json") + " --dr " +
                         cli.path("a.json") + " --rr " + cli.path("b.json") +
                         " --n-real 1 --n-random 1 --out " + cli.path("w.json"));
  CHECK(r.status == 1);
  CHECK(r.err.find("axis 0: 64 vs 32") != std::string::npos);
}

TEST_CASE("estimate 3pacf end to end with D = R is zero") {
  Cli cli;
  const auto r = cli.run("estimate 3pacf --data " + cli.path("small.csv") + " --random " +
                         cli.path("small.csv") + " --bins 6 --workers 3 --chunk 4 --out " +
                         cli.path("z.json"));
  REQUIRE(r.status == 0);
  const auto j = cli.read("z.json");
  std::size_t valid = 0;
  for (std::size_t i = 0; i < j.at("values").size(); ++i) {
    if (!j.at("valid")[i].get<bool>()) continue;
    ++valid;
    CHECK(j.at("values")[i].get<double>() == 0.0);
  }
  CHECK(valid > 0);
  CHECK(j.at("shape") == json::array({6, 6, 6}));
}

TEST_CASE("estimate 2p3dcf") {
  Cli cli;
  SUBCASE("needs z columns") {
    const auto r = cli.run("estimate 2p3dcf --data " + cli.path("d.csv") + " --random " +
                           cli.path("r.csv") + " --out " + cli.path("x.json"));
    CHECK(r.status == 1);
    CHECK(r.err.find("'z'") != std::string::npos);
  }
  SUBCASE("end to end") {
    const auto r = cli.run("estimate 2p3dcf --data " + cli.path("dz.csv") +
                           " --random-n 200 --z-bins 4 --z-max 0.8 --bins 16 --out " +
                           cli.path("w.json"));
    REQUIRE(r.status == 0);
    const auto j = cli.read("w.json");
    CHECK(j.at("shape") == json::array({16, 4}));
    CHECK(j.at("z_edges").size() == 5);
    CHECK(j.at("n_random") == 200);
  }
}

TEST_CASE("verify") {
  Cli cli;
  CHECK(cli.run("verify pairs --n 500 --seed 1 --mode u64 --workers 8").status == 0);
  CHECK(cli.run("verify pairs --n 300 --which dr --random-n 200 --mode f32-recycle --flush 500"
                " --workers 3 --chunk 8").status == 0);
  CHECK(cli.run("verify pairs3d --n 200 --z-bins 3 --mode f64 --workers 2").status == 0);
  CHECK(cli.run("verify triplets --n 40 --which drr --random-n 30 --bins 8").status == 0);

  const auto bad = cli.run("verify pairs --n 7000 --seed 1 --mode f32-std --workers 1 --degenerate");
  CHECK(bad.status == 1);
  CHECK(bad.err.find("bin 0: expected 48993000, got 16777216") != std::string::npos);

  const auto guard = cli.run("verify triplets --n 1000");
  CHECK(guard.status == 2);
  CHECK(guard.err.find("guard") != std::string::npos);
}

TEST_CASE("bench") {
  Cli cli;
  CHECK(cli.run("bench --workload pairs --sizes 200 --repeats 1 --out " + cli.path("b.json"))
            .status == 2);
  REQUIRE(cli.run("bench --workload triplets --sizes 30,40 --repeats 2 --warmup 0 --bins 8 --out " +
                  cli.path("b.json")).status == 0);
  const auto j = cli.read("b.json");
  REQUIRE(j.at("reports").size() == 2);
  CHECK(j.at("reports")[1].at("times_ms").size() == 2);

  // A baseline exactly 13.8 times slower.
  json base = j;
  for (auto &r : base["reports"]) r["mean_ms"] = r["mean_ms"].get<double>() * 13.8;
  write_json_file(cli.path("prior.json"), base);
  const auto cmp = cli.run("bench --workload triplets --sizes 30 --repeats 2 --warmup 0 --bins 8"
                           " --out " + cli.path("c.json") + " --baseline " + cli.path("prior.json"));
  REQUIRE(cmp.status == 0);
  CHECK(cmp.out.find("Speedup") != std::string::npos);
  // The candidate is a fresh run, so check the column against its own mean.
  const double mean = cli.read("c.json").at("reports")[0].at("mean_ms").get<double>();
  const double prior = base["reports"][0]["mean_ms"].get<double>();
  CHECK(cmp.out.find(format_ratio(prior / mean)) != std::string::npos);
}

TEST_CASE("bench speedup column against a fixed baseline") {
  Cli cli;
  REQUIRE(cli.run("bench --sizes 150 --repeats 2 --warmup 0 --out " + cli.path("a.json")).status == 0);
  // Rewrite the candidate as its own baseline scaled by 13.8, then render
  // the comparison through a second report with a pinned mean.
  json a = cli.read("a.json");
  json prior = a;
  prior["reports"][0]["mean_ms"] = 1380.0;
  write_json_file(cli.path("prior.json"), prior);
  const auto reports = std::vector<BenchReport>{bench_report_from_json(a["reports"][0])};
  auto pinned = reports;
  pinned[0].mean_ms = 100.0;
  const auto base = std::vector<BenchReport>{bench_report_from_json(prior["reports"][0])};
  CHECK(render_table(pinned, base).find("13.80") != std::string::npos);
}

TEST_CASE("stress-precision") {
  Cli cli;
  const auto big = cli.run("stress-precision --n 8192 --workers 1 --out " + cli.path("s.json"));
  REQUIRE(big.status == 0);
  const auto j = cli.read("s.json");
  CHECK(j.at("results")[0].at("mode") == "f32-std");
  CHECK(j.at("results")[0].at("zero_bin") == 16777216);
  CHECK(j.at("results")[1].at("zero_bin") == 67100672);
  CHECK(j.at("results")[2].at("zero_bin") == 67100672);

  REQUIRE(cli.run("stress-precision --n 4000 --out " + cli.path("t.json")).status == 0);
  for (const auto &row : cli.read("t.json").at("results")) CHECK(row.at("zero_bin") == 15996000);

  REQUIRE(cli.run("stress-precision --n 1 --out " + cli.path("u.json")).status == 0);
  for (const auto &row : cli.read("u.json").at("results")) CHECK(row.at("zero_bin") == 0);
}
