#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

namespace rml::stats {

// Frozen sorted sample set with its first two moments. Immutable after
// construction; all consumers share by const reference.
class EmpiricalDistribution {
public:
  explicit EmpiricalDistribution(std::vector<double> samples);

  const std::vector<double>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  double mean() const { return mean_; }
  double stddev() const { return stddev_; }  // unbiased
  double min() const { return samples_.front(); }
  double max() const { return samples_.back(); }

  // Right-continuous empirical CDF: #{x_i <= x} / N.
  double cdf(double x) const;
  // Order-statistic quantile (nearest-rank), q in [0, 1].
  double quantile(double q) const;

private:
  std::vector<double> samples_;
  double mean_ = 0.0;
  double stddev_ = 0.0;
};

// tau map: x -> (x - mean)/stddev. Output has mean 0, stddev 1; invariant
// under positive affine maps of the input. Throws NumericError when the
// sample variance vanishes.
EmpiricalDistribution tau_normalize(const EmpiricalDistribution& d);

// Exact sup distance between two empirical CDFs by merge scan (ties handled
// by advancing both sides past each distinct value).
double ks_two_sample(const EmpiricalDistribution& a,
                     const EmpiricalDistribution& b);

// sup_x |F_emp(x) - F(x)| against a reference CDF.
double ks_one_sample(const EmpiricalDistribution& d,
                     const std::function<double(double)>& cdf);

struct Histogram {
  std::vector<double> centers;
  std::vector<std::size_t> counts;
  std::vector<double> density;
  double bin_width = 0.0;
};

// Freedman-Diaconis bin width (fallbacks to a single bin for degenerate
// samples).
Histogram histogram_fd(const EmpiricalDistribution& d);

void write_csv(std::ostream& os, const Histogram& h);

// Reference laws for the edge suite.
double half_normal_cdf(double x);        // |N(0,1)|
double rayleigh_unit_cdf(double x);      // |CN(0,1)|, i.e. sqrt(Exp(1))

}  // namespace rml::stats
