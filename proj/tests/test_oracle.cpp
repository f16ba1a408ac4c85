#include "doctest.h"

#include "corrfn/engine.hpp"
#include "corrfn/oracle.hpp"

using namespace corrfn;

TEST_CASE("degenerate pairs land in the zero bin") {
  const auto rep = oracle_pairs(generate_degenerate_catalog(10, 5, 5), Binning::full_range());
  CHECK(rep.histogram.counts[0] == 90);
  CHECK(rep.histogram.sum() == 90);
}

TEST_CASE("two distinct points") {
  const GalaxyCatalog two({{0, 0}, {45, 10}}, false);
  const auto rep = oracle_pairs(two, Binning::full_range());
  CHECK(rep.histogram.sum() == 2);
  CHECK(rep.histogram.total_evaluations == 2);
}

TEST_CASE("triplet enumerations") {
  const Binning3D b3{Binning::full_range(16)};
  const GalaxyCatalog three({{0, 0}, {30, 0}, {0, 40}}, false);
  const auto rep = oracle_triplets(three, b3);
  CHECK(rep.histogram.sum() == 6);

  const auto deg = oracle_triplets(generate_degenerate_catalog(20, 1, 1), b3);
  CHECK(deg.histogram.at(0, 0, 0) == 20u * 19u * 18u);
  CHECK(deg.histogram.sum() == 6840);
}

TEST_CASE("totals follow the closed forms") {
  const auto d = generate_random_catalog(37, SkyRegion::full_sky(), false, 0, 1);
  const auto r = generate_random_catalog(23, SkyRegion::full_sky(), false, 0, 2);
  const auto b = Binning::full_range();
  CHECK(oracle_pairs(d, b).histogram.sum() == 37u * 36u);
  CHECK(oracle_pairs(d, r, b).histogram.sum() == 37u * 23u);
  CHECK(oracle_triplets(d, Binning3D{b}).histogram.sum() == 37u * 36u * 35u);
  CHECK(oracle_triplets(d, r, Binning3D{b}).histogram.sum() == 37u * 36u * 23u);
}

TEST_CASE("guard") {
  CHECK(auto_triplet_evaluations(1000) == 997002000u);
  const auto big = generate_degenerate_catalog(466, 0, 0);
  CHECK_THROWS_AS(oracle_triplets(big, Binning3D{Binning::full_range(4)}),
                  OracleGuardExceeded);
  const auto wide = generate_degenerate_catalog(10001, 0, 0);
  CHECK_THROWS_AS(oracle_pairs(wide, Binning::full_range()), OracleGuardExceeded);
}

TEST_CASE("comparison reports the first differing bin") {
  auto rep = oracle_pairs(generate_degenerate_catalog(6, 0, 0), Binning::full_range());
  Histogram other = rep.histogram;
  CHECK(rep.compare(other));
  other.counts[0] = 29;
  other.counts[5] = 1;
  CHECK_FALSE(rep.compare(other));
  REQUIRE(rep.mismatch.has_value());
  CHECK(rep.mismatch->index == 0);
  CHECK(rep.mismatch->expected == 30);
  CHECK(rep.mismatch->got == 29);
  CHECK(rep.mismatch->count == 2);
}

TEST_CASE("500-point catalog matches the engine") {
  const auto cat = generate_random_catalog(500, SkyRegion::full_sky(), false, 0, 1);
  auto rep = oracle_pairs(cat, Binning::full_range());
  CHECK(rep.compare(count_pairs_auto(cat, Binning::full_range(),
                                     {8, CountMode::U64Exact, kF32ConsecutiveLimit, 16})));
}
