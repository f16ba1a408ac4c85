#include "corrfn/estimators.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>

namespace corrfn {

namespace {

void check_inputs(std::initializer_list<const Histogram *> hists, int dims,
                  std::uint64_t n_real, std::uint64_t n_random) {
  if (n_real < 1 || n_random < 1)
    throw std::invalid_argument("catalog sizes must be >= 1");
  const Histogram &first = **hists.begin();
  for (const Histogram *h : hists) {
    if (h->dims != dims)
      throw std::invalid_argument("expected " + std::to_string(dims) +
                                  "-dimensional histograms, got " +
                                  std::to_string(h->dims));
    if (auto msg = shape_mismatch(first, *h); !msg.empty())
      throw std::invalid_argument("histogram shape mismatch: " + msg);
  }
}

EstimatorResult pair_estimator(const Histogram &dd, const Histogram &dr,
                               const Histogram &rr, std::uint64_t n_real,
                               std::uint64_t n_random) {
  EstimatorResult out;
  out.shape = rr.shape;
  out.n_real = n_real;
  out.n_random = n_random;
  out.values.assign(rr.size(), 0.0);
  out.valid.assign(rr.size(), false);
  const double ratio = static_cast<double>(n_random) / static_cast<double>(n_real);
  for (std::size_t i = 0; i < rr.size(); ++i) {
    if (rr.counts[i] == 0) continue;
    const double denom = static_cast<double>(rr.counts[i]);
    const double dd_term = ratio * ratio * (static_cast<double>(dd.counts[i]) / denom);
    const double dr_term = 2.0 * ratio * (static_cast<double>(dr.counts[i]) / denom);
    out.values[i] = 1.0 + dd_term - dr_term;
    out.valid[i] = true;
  }
  return out;
}

} // namespace

std::size_t EstimatorResult::valid_count() const {
  return static_cast<std::size_t>(std::count(valid.begin(), valid.end(), true));
}

EstimatorResult landy_szalay_2pacf(const Histogram &dd, const Histogram &dr,
                                   const Histogram &rr, std::uint64_t n_real,
                                   std::uint64_t n_random) {
  check_inputs({&dd, &dr, &rr}, 1, n_real, n_random);
  return pair_estimator(dd, dr, rr, n_real, n_random);
}

EstimatorResult estimate_2p3dcf(const Histogram &dd, const Histogram &dr,
                                const Histogram &rr, std::uint64_t n_real,
                                std::uint64_t n_random) {
  check_inputs({&dd, &dr, &rr}, 2, n_real, n_random);
  return pair_estimator(dd, dr, rr, n_real, n_random);
}

EstimatorResult estimate_3pacf(const Histogram &ddd, const Histogram &ddr,
                               const Histogram &drr, const Histogram &rrr,
                               std::uint64_t n_real, std::uint64_t n_random) {
  check_inputs({&ddd, &ddr, &drr, &rrr}, 3, n_real, n_random);
  EstimatorResult out;
  out.shape = rrr.shape;
  out.n_real = n_real;
  out.n_random = n_random;
  out.values.assign(rrr.size(), 0.0);
  out.valid.assign(rrr.size(), false);
  const double ratio = static_cast<double>(n_random) / static_cast<double>(n_real);
  for (std::size_t i = 0; i < rrr.size(); ++i) {
    if (rrr.counts[i] == 0) continue;
    const double denom = static_cast<double>(rrr.counts[i]);
    const double t_ddd = ratio * ratio * ratio * (static_cast<double>(ddd.counts[i]) / denom);
    const double t_ddr = 3.0 * ratio * ratio * (static_cast<double>(ddr.counts[i]) / denom);
    const double t_drr = 3.0 * ratio * (static_cast<double>(drr.counts[i]) / denom);
    // Grouped so that DDD = RRR with DDR = DRR gives exactly zero.
    out.values[i] = (t_ddd - 1.0) - (t_ddr - t_drr);
    out.valid[i] = true;
  }
  return out;
}

} // namespace corrfn
