#include "corrfn/geometry.hpp"

#include <stdexcept>

namespace corrfn {

std::string to_string(BinScale scale) {
  return scale == BinScale::Linear ? "linear" : "log";
}

BinScale parse_bin_scale(const std::string &name) {
  if (name == "linear" || name == "lin") return BinScale::Linear;
  if (name == "log" || name == "logarithmic") return BinScale::Logarithmic;
  throw std::invalid_argument("unknown bin scale '" + name + "'");
}

Axis::Axis(double lo, double hi, std::size_t nbins, BinScale scale)
    : lo_(lo), hi_(hi), nbins_(nbins), scale_(scale) {
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("bin range must be finite");
  if (!(lo < hi)) throw std::invalid_argument("bin range requires lo < hi");
  if (nbins < 1) throw std::invalid_argument("at least one bin is required");
  if (scale == BinScale::Logarithmic && !(lo > 0.0))
    throw std::invalid_argument("logarithmic binning requires lo > 0");

  const double n = static_cast<double>(nbins);
  edges_.resize(nbins + 1);
  if (scale == BinScale::Linear) {
    inv_span_ = n / (hi - lo);
    for (std::size_t i = 0; i <= nbins; ++i)
      edges_[i] = lo + (hi - lo) * (static_cast<double>(i) / n);
  } else {
    const double log_ratio = std::log(hi / lo);
    inv_span_ = n / log_ratio;
    for (std::size_t i = 0; i <= nbins; ++i)
      edges_[i] = lo * std::exp(log_ratio * (static_cast<double>(i) / n));
  }
  edges_.front() = lo;
  edges_.back() = hi;
  for (std::size_t i = 0; i < nbins; ++i) {
    if (!(edges_[i] < edges_[i + 1]))
      throw std::invalid_argument("bin edges are not strictly increasing; "
                                  "too many bins for the range");
  }
}

Binning::Binning(double lo, double hi, std::size_t nbins, BinScale scale)
    : axis_(lo, hi, nbins, scale) {
  if (lo < 0.0 || hi > kPi)
    throw std::invalid_argument("angular bins must lie within [0, pi] radians");
}

Binning Binning::from_degrees(double lo_deg, double hi_deg, std::size_t nbins,
                              BinScale scale) {
  if (lo_deg < 0.0 || hi_deg > 180.0)
    throw std::invalid_argument("angular bins must lie within [0, 180] degrees");
  // 180 degrees must map to exactly pi so that antipodal pairs stay in range.
  const double hi = hi_deg == 180.0 ? kPi : deg_to_rad(hi_deg);
  return Binning(deg_to_rad(lo_deg), hi, nbins, scale);
}

Binning Binning::full_range(std::size_t nbins) {
  return Binning(0.0, kPi, nbins, BinScale::Linear);
}

std::vector<double> Binning::edges_deg() const {
  std::vector<double> out;
  out.reserve(edges().size());
  for (double e : edges()) out.push_back(rad_to_deg(e));
  return out;
}

RedshiftBinning::RedshiftBinning(double lo, double hi, std::size_t nbins)
    : axis_(lo, hi, nbins, BinScale::Linear) {
  if (lo < 0.0)
    throw std::invalid_argument("redshift-difference bins must start at >= 0");
}

} // namespace corrfn
