#include "doctest.h"

#include "corrfn/engine.hpp"
#include "corrfn/io.hpp"
#include "test_support.hpp"

using namespace corrfn;

TEST_CASE("histogram json keeps layout and counts") {
  const auto cat = generate_random_catalog(50, SkyRegion::full_sky(), true, 1.0, 3);
  const auto h = count_pairs_3d_auto(cat, Binning::from_degrees(0.0, 90.0, 8),
                                     RedshiftBinning(0.0, 0.5, 3), {});
  TempDir dir;
  write_json_file(dir.path() / "h.json", histogram_to_json(h, {{"k", 1}}));
  const auto j = read_json_file(dir.path() / "h.json");
  CHECK(j.at("dims") == 2);
  CHECK(j.at("shape") == json::array({8, 3}));
  CHECK(j.at("edges_deg").size() == 1);
  CHECK(j.at("edges_deg")[0].back() == 90.0);
  CHECK(j.at("z_edges").size() == 4);
  CHECK(j.at("manifest").at("k") == 1);

  const auto back = histogram_from_json(j);
  CHECK(back.counts == h.counts);
  CHECK(back.shape == h.shape);
  CHECK(back.total_evaluations == h.total_evaluations);
  CHECK(back.in_range == h.in_range);
  CHECK(back.angular == h.angular);
  CHECK(back.redshift == h.redshift);
}

TEST_CASE("triplet histograms list three angular axes") {
  const auto h = Histogram::triplets(Binning3D{Binning::full_range(4)}, CountMode::F64);
  const auto j = histogram_to_json(h);
  CHECK(j.at("edges_deg").size() == 3);
  CHECK(j.at("mode") == "f64");
  CHECK(histogram_from_json(j).shape == h.shape);
}

TEST_CASE("malformed histogram files are rejected") {
  auto j = histogram_to_json(Histogram::pairs(Binning::full_range(4), CountMode::U64Exact));
  j["counts"] = json::array({1, 2});
  CHECK_THROWS(histogram_from_json(j));
  CHECK_THROWS(histogram_from_json(json{{"dims", 1}}));
}

TEST_CASE("estimator json writes null for invalid bins") {
  EstimatorResult r;
  r.shape = {2};
  r.values = {0.25, 0.0};
  r.valid = {true, false};
  r.n_real = 3;
  r.n_random = 4;
  const auto j = estimator_to_json(
      r, Histogram::pairs(Binning::full_range(2), CountMode::U64Exact), "2pacf");
  CHECK(j.at("values")[0] == 0.25);
  CHECK(j.at("values")[1].is_null());
  CHECK(j.at("valid") == json::array({true, false}));
  CHECK(j.at("estimator") == "2pacf");
}

TEST_CASE("bench report round trip") {
  BenchReport r;
  r.workload.n = 1234;
  r.times_ms = {1.0, 2.0};
  r.mean_ms = 1.5;
  r.std_ms = 0.7;
  const auto back = bench_report_from_json(bench_report_to_json(r));
  CHECK(back.workload.n == 1234);
  CHECK(back.mean_ms == 1.5);
  CHECK(back.times_ms == r.times_ms);
}

TEST_CASE("file digest is content based") {
  TempDir dir;
  const auto a = dir.write("a.txt", "hello");
  const auto b = dir.write("b.txt", "hello");
  const auto c = dir.write("c.txt", "hellp");
  CHECK(file_digest(a) == file_digest(b));
  CHECK(file_digest(a) != file_digest(c));
  CHECK(file_digest(a).rfind("fnv1a64:", 0) == 0);
}
