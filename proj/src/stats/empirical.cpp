#include "stats/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "common/errors.hpp"

namespace rml::stats {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples)
    : samples_(std::move(samples)) {
  if (samples_.empty()) {
    throw ParameterError("EmpiricalDistribution: empty sample set");
  }
  std::sort(samples_.begin(), samples_.end());
  double s = 0.0;
  for (double v : samples_) s += v;
  mean_ = s / static_cast<double>(samples_.size());
  if (samples_.size() >= 2) {
    double ss = 0.0;
    for (double v : samples_) ss += (v - mean_) * (v - mean_);
    stddev_ = std::sqrt(ss / static_cast<double>(samples_.size() - 1));
  }
}

double EmpiricalDistribution::cdf(double x) const {
  const auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
  return static_cast<double>(it - samples_.begin()) /
         static_cast<double>(samples_.size());
}

double EmpiricalDistribution::quantile(double q) const {
  if (q <= 0.0) return samples_.front();
  if (q >= 1.0) return samples_.back();
  const std::size_t idx = static_cast<std::size_t>(
      std::ceil(q * static_cast<double>(samples_.size())) - 1.0);
  return samples_[std::min(idx, samples_.size() - 1)];
}

EmpiricalDistribution tau_normalize(const EmpiricalDistribution& d) {
  if (d.size() < 2) {
    throw ParameterError("tau_normalize: need at least 2 samples");
  }
  if (!(d.stddev() > 0.0)) {
    throw NumericError("tau_normalize: zero sample variance");
  }
  std::vector<double> out;
  out.reserve(d.size());
  for (double v : d.samples()) out.push_back((v - d.mean()) / d.stddev());
  return EmpiricalDistribution(std::move(out));
}

double ks_two_sample(const EmpiricalDistribution& a,
                     const EmpiricalDistribution& b) {
  const auto& xa = a.samples();
  const auto& xb = b.samples();
  const double na = static_cast<double>(xa.size());
  const double nb = static_cast<double>(xb.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < xa.size() || j < xb.size()) {
    double v;
    if (i < xa.size() && j < xb.size()) {
      v = std::min(xa[i], xb[j]);
    } else if (i < xa.size()) {
      v = xa[i];
    } else {
      v = xb[j];
    }
    while (i < xa.size() && xa[i] == v) ++i;
    while (j < xb.size() && xb[j] == v) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na -
                              static_cast<double>(j) / nb));
  }
  return d;
}

double ks_one_sample(const EmpiricalDistribution& d,
                     const std::function<double(double)>& cdf) {
  const auto& x = d.samples();
  const double n = static_cast<double>(x.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    sup = std::max(sup, std::fabs((static_cast<double>(i) + 1.0) / n - f));
    sup = std::max(sup, std::fabs(static_cast<double>(i) / n - f));
  }
  return sup;
}

Histogram histogram_fd(const EmpiricalDistribution& d) {
  Histogram h;
  const double iqr = d.quantile(0.75) - d.quantile(0.25);
  const double range = d.max() - d.min();
  double width =
      2.0 * iqr / std::cbrt(static_cast<double>(d.size()));
  if (!(width > 0.0)) width = range > 0.0 ? range : 1.0;
  std::size_t bins = static_cast<std::size_t>(std::ceil(range / width));
  if (bins == 0) bins = 1;
  if (bins > 100000) bins = 100000;
  width = range > 0.0 ? range / static_cast<double>(bins) : width;

  h.bin_width = width;
  h.centers.resize(bins);
  h.counts.assign(bins, 0);
  for (std::size_t b = 0; b < bins; ++b) {
    h.centers[b] = d.min() + (static_cast<double>(b) + 0.5) * width;
  }
  for (double v : d.samples()) {
    std::size_t b = width > 0.0
                        ? static_cast<std::size_t>((v - d.min()) / width)
                        : 0;
    if (b >= bins) b = bins - 1;
    ++h.counts[b];
  }
  h.density.resize(bins);
  const double denom = static_cast<double>(d.size()) * width;
  for (std::size_t b = 0; b < bins; ++b) {
    h.density[b] = static_cast<double>(h.counts[b]) / denom;
  }
  return h;
}

void write_csv(std::ostream& os, const Histogram& h) {
  os << "bin_center,count,density\n";
  char buf[80];
  for (std::size_t b = 0; b < h.centers.size(); ++b) {
    std::snprintf(buf, sizeof buf, "%.17g,%zu,%.17g\n", h.centers[b],
                  h.counts[b], h.density[b]);
    os << buf;
  }
}

double half_normal_cdf(double x) {
  return x <= 0.0 ? 0.0 : std::erf(x / std::sqrt(2.0));
}

double rayleigh_unit_cdf(double x) {
  return x <= 0.0 ? 0.0 : -std::expm1(-x * x);
}

}  // namespace rml::stats
