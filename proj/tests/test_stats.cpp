#include <doctest.h>

#include <cmath>

#include "common/errors.hpp"
#include "common/rng.hpp"
#include "spectral/semicircle.hpp"
#include "stats/conditions.hpp"
#include "stats/edge_suite.hpp"
#include "stats/empirical.hpp"
#include "stats/scalings.hpp"

using namespace rml;
using stats::EmpiricalDistribution;

TEST_CASE("empirical distribution moments and cdf") {
  EmpiricalDistribution d({3.0, 1.0, 2.0});
  CHECK(d.samples() == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(d.mean() == doctest::Approx(2.0));
  CHECK(d.stddev() == doctest::Approx(1.0));  // unbiased
  CHECK(d.cdf(0.5) == 0.0);
  CHECK(d.cdf(1.0) == doctest::Approx(1.0 / 3.0));
  CHECK(d.cdf(2.5) == doctest::Approx(2.0 / 3.0));
  CHECK(d.cdf(9.0) == 1.0);
  CHECK_THROWS_AS(EmpiricalDistribution({}), ParameterError);
}

TEST_CASE("tau normalization: exact small case and affine invariance") {
  const auto tau = stats::tau_normalize(EmpiricalDistribution({1.0, 2.0, 3.0}));
  CHECK(tau.samples()[0] == doctest::Approx(-1.0));
  CHECK(tau.samples()[1] == doctest::Approx(0.0));
  CHECK(tau.samples()[2] == doctest::Approx(1.0));
  CHECK(std::fabs(tau.mean()) < 1e-10);
  CHECK(tau.stddev() == doctest::Approx(1.0).epsilon(1e-10));

  Rng rng(4);
  std::vector<double> raw;
  for (int i = 0; i < 100; ++i) raw.push_back(rng.next_gaussian() * 3.0 + 7.0);
  std::vector<double> affine;
  for (double v : raw) affine.push_back(2.5 * v + 11.0);
  const auto t1 = stats::tau_normalize(EmpiricalDistribution(raw));
  const auto t2 = stats::tau_normalize(EmpiricalDistribution(affine));
  for (std::size_t i = 0; i < raw.size(); ++i) {
    CHECK(t1.samples()[i] == doctest::Approx(t2.samples()[i]).epsilon(1e-9));
  }

  CHECK_THROWS_AS(stats::tau_normalize(EmpiricalDistribution({5.0, 5.0, 5.0})),
                  NumericError);
}

TEST_CASE("two-sample KS: hand values and metric properties") {
  EmpiricalDistribution a({1.0, 2.0, 3.0});
  CHECK(stats::ks_two_sample(a, a) == 0.0);
  CHECK(stats::ks_two_sample(EmpiricalDistribution({0.0, 0.0, 0.0}),
                             EmpiricalDistribution({1.0, 1.0, 1.0})) == 1.0);
  CHECK(stats::ks_two_sample(a, EmpiricalDistribution({1.5, 2.5, 3.5})) ==
        doctest::Approx(1.0 / 3.0));

  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> xs, ys, zs;
    for (int i = 0; i < 31; ++i) xs.push_back(rng.next_gaussian());
    for (int i = 0; i < 17; ++i) ys.push_back(rng.next_gaussian() + 0.3);
    for (int i = 0; i < 23; ++i) zs.push_back(rng.next_gaussian() - 0.2);
    EmpiricalDistribution dx(xs), dy(ys), dz(zs);
    const double dxy = stats::ks_two_sample(dx, dy);
    const double dyx = stats::ks_two_sample(dy, dx);
    CHECK(dxy == dyx);  // symmetry
    CHECK(stats::ks_two_sample(dx, dz) <=
          dxy + stats::ks_two_sample(dy, dz) + 1e-15);  // triangle bound
  }
}

TEST_CASE("theorem1 scaling block") {
  stats::ScalingConstants c;
  // n = 100, eps = 1e-6, C_v = 1 gives denominator ~ 145.8
  const double scaled = stats::theorem1_scale(145.84, 100, 1e-6, c);
  CHECK(scaled == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(stats::theorem1_scale(0.0, 100, 1e-6, c) == 0.0);
  const double one = stats::theorem1_scale(7.0, 100, 1e-6, c);
  const double two = stats::theorem1_scale(14.0, 100, 1e-6, c);
  CHECK(two == doctest::Approx(2.0 * one).epsilon(1e-14));

  // eps too weak for this n: denominator goes nonpositive
  CHECK_THROWS_AS(stats::theorem1_scale(1.0, 100, 0.9, c), NumericError);

  CHECK(stats::scaling_region_ok(1e-6, 100, 0.5));
  CHECK(!stats::scaling_region_ok(1e-2, 100, 0.5));
}

TEST_CASE("gap scaling") {
  stats::ScalingConstants c;
  // reciprocal identity: gap = 1/(2^{-2/3} n^{2/3}) makes the output exactly 1
  spectral::SpectralData sd;
  sd.lambda = {0.0, 1.0,
               1.0 + std::pow(2.0, 2.0 / 3.0) * std::pow(100.0, -2.0 / 3.0)};
  sd.beta = {0.5, 0.5, std::sqrt(0.5)};
  CHECK(stats::gap_scale(sd, 100, c) == doctest::Approx(1.0).epsilon(1e-12));

  spectral::SpectralData half = sd;
  half.lambda[2] = 1.0 + 0.5 * (sd.lambda[2] - 1.0);
  CHECK(stats::gap_scale(half, 100, c) ==
        doctest::Approx(2.0 * stats::gap_scale(sd, 100, c)).epsilon(1e-12));

  spectral::SpectralData degen;
  degen.lambda = {0.0, 1.0, 1.0};
  degen.beta = {0.5, 0.5, std::sqrt(0.5)};
  CHECK_THROWS_AS(stats::gap_scale(degen, 100, c), NumericError);
}

TEST_CASE("condition1 hand cases") {
  spectral::SpectralData sd;
  sd.beta = {0.5, 0.5, std::sqrt(0.5)};
  sd.lambda = {1.0, 2.0, 4.0};
  CHECK(stats::condition1(sd, 0.3));
  sd.lambda = {1.0, 3.9, 4.0};
  CHECK(stats::condition1(sd, 0.3));
  sd.lambda = {1.0, 1.01, 4.0};
  CHECK(!stats::condition1(sd, 0.3));
  CHECK_THROWS_AS(stats::condition1(sd, 0.5), ParameterError);
  CHECK_THROWS_AS(stats::condition1(sd, 0.0), ParameterError);
}

TEST_CASE("condition1 complement probabilities are monotone by construction") {
  std::vector<spectral::SpectralData> samples;
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    spectral::SpectralData sd;
    sd.lambda = {0.0, 1.0 + 0.2 * rng.next_double(), 1.5 + rng.next_double()};
    sd.beta = {0.5, 0.5, std::sqrt(0.5)};
    samples.push_back(sd);
  }
  const std::vector<double> p_grid{0.3, 0.2, 0.1, 0.05, 0.02};
  const auto pc = stats::condition1_complement_probabilities(samples, p_grid);
  for (std::size_t i = 1; i < pc.size(); ++i) CHECK(pc[i] <= pc[i - 1]);

  // planted deterministic spectrum (1,2,4): in G for every p < 1/3
  std::vector<spectral::SpectralData> planted;
  for (int i = 0; i < 10; ++i) {
    spectral::SpectralData sd;
    sd.lambda = {1.0, 2.0, 4.0};
    sd.beta = {0.5, 0.5, std::sqrt(0.5)};
    planted.push_back(sd);
  }
  for (double p : stats::condition1_complement_probabilities(planted, p_grid)) {
    CHECK(p == 0.0);
  }
}

TEST_CASE("condition2 clause logic with planted data") {
  const std::size_t n = 100;
  const auto gamma = spectral::semicircle_quantiles(n);
  spectral::SpectralData sd;
  sd.lambda = gamma;  // rigidity clause exactly satisfied
  // make the top gaps sit inside the allowed band
  const double nd = static_cast<double>(n);
  sd.lambda[n - 1] = 2.0;
  sd.lambda[n - 2] = 2.0 - std::pow(nd, -2.0 / 3.0);
  sd.lambda[n - 3] = 2.0 - 1.5 * std::pow(nd, -2.0 / 3.0);
  sd.beta.assign(n, 1.0 / std::sqrt(nd));

  const double s = 0.2;
  auto r = stats::condition2(sd, s, 2.0, gamma);
  // clause (iv) tolerates the edge tweaks: |l_j - gamma_j| <= n^{-2/3+s} there
  CHECK(r.beta_upper);
  CHECK(r.beta_lower);
  CHECK(r.edge_gaps);

  // planting beta_1 = 1 violates clause (i)
  spectral::SpectralData bad = sd;
  bad.beta.assign(n, 0.0);
  bad.beta[0] = 1.0;
  auto rb = stats::condition2(bad, s, 2.0, gamma);
  CHECK(!rb.beta_upper);
  CHECK(!rb.beta_lower);

  CHECK_THROWS_AS(stats::condition2(sd, 0.0, 2.0, gamma), ParameterError);
}

TEST_CASE("histogram: freedman-diaconis bins capture all samples") {
  Rng rng(3);
  std::vector<double> xs;
  for (int i = 0; i < 2000; ++i) xs.push_back(rng.next_gaussian());
  const auto h = stats::histogram_fd(EmpiricalDistribution(xs));
  std::size_t total = 0;
  double mass = 0.0;
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    total += h.counts[b];
    mass += h.density[b] * h.bin_width;
  }
  CHECK(total == xs.size());
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(h.counts.size() > 10);
}

TEST_CASE("edge suite self-test: synthetic draws match their own law") {
  Rng rng(6);
  const std::size_t n = 64, m = 2000;
  std::vector<spectral::SpectralData> fake(m);
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  for (auto& sd : fake) {
    sd.lambda.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      sd.lambda[j] = -2.0 + 3.9 * static_cast<double>(j) / (n - 1);
    }
    // jitter the top three so the triples are never degenerate
    sd.lambda[n - 1] = 2.0 - 0.1 * rng.next_double();
    sd.lambda[n - 2] = sd.lambda[n - 1] - 0.05 - 0.1 * rng.next_double();
    sd.lambda[n - 3] = sd.lambda[n - 2] - 0.05 - 0.1 * rng.next_double();
    sd.beta.assign(n, 0.0);
    // half-normal draws scaled by 1/sqrt(n)
    for (std::size_t j = 0; j < n; ++j) {
      sd.beta[j] = std::fabs(rng.next_gaussian()) / sqrt_n;
    }
  }
  const auto rep = stats::edge_statistics_suite(fake, n, 2.0, 1);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(rep.ks_half_normal[k] < 0.05);
    CHECK(rep.ks_first_component[k] == rep.ks_half_normal[k]);
  }
  CHECK(rep.degenerate_triples == 0);

  CHECK_THROWS_AS(
      stats::edge_statistics_suite({fake.begin(), fake.begin() + 50}, n, 2.0, 1),
      ParameterError);
}

TEST_CASE("half-normal and unit-rayleigh cdfs") {
  CHECK(stats::half_normal_cdf(0.0) == 0.0);
  CHECK(stats::half_normal_cdf(1.0) == doctest::Approx(0.6826894921).epsilon(1e-9));
  CHECK(stats::rayleigh_unit_cdf(1.0) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
  // the two laws differ markedly in the bulk: KS distance about 0.165
  double sup = 0.0;
  for (double x = 0.0; x < 4.0; x += 1e-3) {
    sup = std::max(sup,
                   std::fabs(stats::half_normal_cdf(x) - stats::rayleigh_unit_cdf(x)));
  }
  CHECK(sup > 0.15);
  CHECK(sup < 0.18);
}
