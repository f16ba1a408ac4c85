#include "doctest.h"

#include <cmath>
#include <random>

#include "corrfn/estimators.hpp"

using namespace corrfn;

namespace {

Histogram hist1(std::vector<std::uint64_t> counts) {
  Histogram h = Histogram::pairs(Binning::full_range(counts.size()), CountMode::U64Exact);
  h.counts = std::move(counts);
  return h;
}

Histogram hist3(std::size_t n, std::vector<std::uint64_t> counts) {
  Histogram h = Histogram::triplets(Binning3D{Binning::full_range(n)}, CountMode::U64Exact);
  h.counts = std::move(counts);
  return h;
}

std::vector<std::uint64_t> random_counts(std::size_t n, std::mt19937_64 &rng) {
  std::uniform_int_distribution<std::uint64_t> u(0, 1'000'000'000);
  std::vector<std::uint64_t> v(n);
  for (auto &x : v) x = u(rng);
  return v;
}

Histogram scaled(Histogram h, std::uint64_t k) {
  for (auto &c : h.counts) c *= k;
  return h;
}

} // namespace

TEST_CASE("landy-szalay closed-form cases") {
  const auto same = hist1({5, 9, 1000});
  const auto w = landy_szalay_2pacf(same, same, same, 40, 40);
  for (double v : w.values) CHECK(v == 0.0);
  CHECK(w.valid_count() == 3);

  const auto r = landy_szalay_2pacf(hist1({8}), hist1({8}), hist1({16}), 10, 20);
  CHECK(r.values[0] == 1.0);

  const auto holes = landy_szalay_2pacf(hist1({1, 2, 3}), hist1({1, 2, 3}),
                                        hist1({4, 0, 6}), 5, 5);
  CHECK(holes.valid == std::vector<bool>{true, false, true});
  CHECK(std::isfinite(holes.values[0]));
  CHECK(holes.values[2] == doctest::Approx(1.0 + 0.5 - 1.0));
}

TEST_CASE("2p3dcf") {
  const auto ab = Binning::full_range(3);
  const RedshiftBinning one(0.0, 1.0, 1);
  auto grid = [&](std::vector<std::uint64_t> c) {
    Histogram h = Histogram::pairs3d(ab, one, CountMode::U64Exact);
    h.counts = std::move(c);
    return h;
  };
  const auto v3 = estimate_2p3dcf(grid({3, 7, 9}), grid({4, 7, 2}), grid({5, 8, 9}), 10, 15);
  const auto v1 = landy_szalay_2pacf(hist1({3, 7, 9}), hist1({4, 7, 2}), hist1({5, 8, 9}), 10, 15);
  CHECK(v3.values == v1.values);

  const auto eq = estimate_2p3dcf(grid({3, 7, 9}), grid({3, 7, 9}), grid({3, 7, 9}), 4, 4);
  for (double v : eq.values) CHECK(v == 0.0);
  CHECK(estimate_2p3dcf(grid({1, 1, 1}), grid({1, 1, 1}), grid({0, 0, 0}), 4, 4)
            .valid_count() == 0);
}

TEST_CASE("3pacf closed-form cases") {
  const auto rrr = hist3(2, {1, 2, 3, 4, 5, 6, 7, 0});
  const auto zero = estimate_3pacf(rrr, rrr, rrr, rrr, 9, 9);
  for (std::size_t i = 0; i < 7; ++i) CHECK(zero.values[i] == 0.0);
  CHECK_FALSE(zero.valid[7]);

  auto times = [&](std::uint64_t k) { return scaled(rrr, k); };
  const auto one = estimate_3pacf(times(8), times(4), times(2), rrr, 9, 9);
  for (std::size_t i = 0; i < 7; ++i) CHECK(one.values[i] == 1.0);
}

TEST_CASE("estimators are invariant under common scaling") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const auto dd = hist1(random_counts(16, rng));
    const auto dr = hist1(random_counts(16, rng));
    const auto rr = hist1(random_counts(16, rng));
    const auto a = landy_szalay_2pacf(dd, dr, rr, 1000, 3000);
    const auto b = landy_szalay_2pacf(scaled(dd, 7), scaled(dr, 7), scaled(rr, 7), 1000, 3000);
    CHECK(a.values == b.values);
    CHECK(a.valid == b.valid);

    const auto t = [&] { return hist3(3, random_counts(27, rng)); };
    const auto ddd = t(), ddr = t(), drr = t(), rrr = t();
    const auto z1 = estimate_3pacf(ddd, ddr, drr, rrr, 500, 700);
    const auto z2 = estimate_3pacf(scaled(ddd, 7), scaled(ddr, 7), scaled(drr, 7),
                                   scaled(rrr, 7), 500, 700);
    CHECK(z1.values == z2.values);
  }
}

TEST_CASE("shape and size errors") {
  CHECK_THROWS(landy_szalay_2pacf(hist1({1, 2}), hist1({1, 2, 3}), hist1({1, 2}), 1, 1));
  CHECK_THROWS(landy_szalay_2pacf(hist1({1}), hist1({1}), hist1({1}), 0, 1));
  CHECK_THROWS(estimate_2p3dcf(hist1({1}), hist1({1}), hist1({1}), 1, 1));
  CHECK_THROWS(estimate_3pacf(hist3(2, std::vector<std::uint64_t>(8, 1)),
                              hist3(2, std::vector<std::uint64_t>(8, 1)),
                              hist3(3, std::vector<std::uint64_t>(27, 1)),
                              hist3(2, std::vector<std::uint64_t>(8, 1)), 1, 1));
}
