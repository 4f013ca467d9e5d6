#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "common/errors.hpp"
#include "common/rng.hpp"
#include "ensembles/ensembles.hpp"
#include "oracles.hpp"
#include "spectral/semicircle.hpp"
#include "spectral/spectral.hpp"

using namespace rml;
using ensembles::Kind;

TEST_CASE("tridiagonalize leaves a diagonal matrix unchanged") {
  ensembles::RandomMatrix h;
  h.spec = {Kind::GOE, 4};
  h.re = linalg::Matrix(4, 4);
  for (std::size_t i = 0; i < 4; ++i) h.re(i, i) = static_cast<double>(i) - 1.5;
  const auto t = spectral::tridiagonalize(h);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(t.diag[i] == doctest::Approx(h.re(i, i)));
  }
  for (double e : t.off) CHECK(e == 0.0);
}

TEST_CASE("tridiagonalize rejects non-self-adjoint input") {
  ensembles::RandomMatrix h;
  h.spec = {Kind::GOE, 2};
  h.re = linalg::Matrix(2, 2);
  h.re(0, 1) = 1.0;
  h.re(1, 0) = 2.0;
  CHECK_THROWS_AS(spectral::tridiagonalize(h), ContractViolation);
}

TEST_CASE("trace is preserved by the reduction") {
  for (Kind kind : {Kind::GOE, Kind::GUE}) {
    const auto h = ensembles::sample({kind, 40}, 3);
    const auto t = spectral::tridiagonalize(h);
    double tr_h = 0.0, tr_t = 0.0, max_entry = 0.0;
    for (std::size_t i = 0; i < 40; ++i) {
      tr_h += h.re(i, i);
      tr_t += t.diag[i];
      for (std::size_t j = 0; j < 40; ++j)
        max_entry = std::max(max_entry, std::fabs(h.re(i, j)));
    }
    CHECK(std::fabs(tr_h - tr_t) <= 1e-12 * 40 * std::max(1.0, max_entry));
  }
}

TEST_CASE("4x4 all-ones matrix reduces with spectrum {0,0,0,4}") {
  ensembles::RandomMatrix h;
  h.spec = {Kind::GOE, 4};
  h.re = linalg::Matrix(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) h.re(i, j) = 1.0;
  const auto t = spectral::tridiagonalize(h);
  const auto ev = oracles::tridiag_eigenvalues_bisection(t);
  CHECK(std::fabs(ev[0]) < 1e-10);
  CHECK(std::fabs(ev[1]) < 1e-10);
  CHECK(std::fabs(ev[2]) < 1e-10);
  CHECK(ev[3] == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("eigen_full on a diagonal tridiagonal") {
  linalg::Tridiagonal t;
  t.diag = {3.0, 1.0, 2.0};
  t.off = {0.0, 0.0};
  const auto sd = spectral::eigen_full(t);
  CHECK(sd.lambda[0] == doctest::Approx(1.0));
  CHECK(sd.lambda[1] == doctest::Approx(2.0));
  CHECK(sd.lambda[2] == doctest::Approx(3.0));
  // first basis vector belongs to eigenvalue 3
  CHECK(sd.beta[2] == doctest::Approx(1.0));
  CHECK(std::fabs(sd.beta[0]) < 1e-14);
  CHECK(std::fabs(sd.beta[1]) < 1e-14);
}

TEST_CASE("eigen_full on the 2x2 swap matrix") {
  linalg::Tridiagonal t;
  t.diag = {0.0, 0.0};
  t.off = {1.0};
  const auto sd = spectral::eigen_full(t);
  CHECK(sd.lambda[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(sd.lambda[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sd.beta[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(sd.beta[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("random 8x8: residuals against inverse-iteration eigenvectors") {
  Rng rng(12);
  linalg::Tridiagonal t;
  t.diag.resize(8);
  t.off.resize(7);
  for (auto& d : t.diag) d = rng.next_gaussian();
  for (auto& e : t.off) e = rng.next_gaussian();

  const auto sd = spectral::eigen_full(t);
  for (std::size_t j = 0; j < 8; ++j) {
    const auto v = oracles::tridiag_inverse_iteration(t, sd.lambda[j]);
    // residual || T v - lambda v ||
    double res2 = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
      double s = t.diag[i] * v[i];
      if (i > 0) s += t.off[i - 1] * v[i - 1];
      if (i + 1 < 8) s += t.off[i] * v[i + 1];
      s -= sd.lambda[j] * v[i];
      res2 += s * s;
    }
    CHECK(std::sqrt(res2) < 1e-10);
    CHECK(std::fabs(v[0]) == doctest::Approx(sd.beta[j]).epsilon(1e-8));
  }
}

TEST_CASE("beta vector stays normalized and matches the dense matrix") {
  for (Kind kind : {Kind::GOE, Kind::GUE, Kind::BernoulliReal,
                    Kind::BernoulliComplex}) {
    const auto h = ensembles::sample({kind, 30}, 17);
    const auto sd = spectral::analyze(h);
    sd.validate();
    double sum2 = 0.0;
    for (double b : sd.beta) sum2 += b * b;
    CHECK(std::fabs(sum2 - 1.0) < 1e-10);

    // similarity invariants: sum lambda = tr H, sum lambda^2 = tr H^2
    double tr = 0.0, tr2 = 0.0, sl = 0.0, sl2 = 0.0;
    for (std::size_t i = 0; i < 30; ++i) {
      tr += h.re(i, i);
      for (std::size_t j = 0; j < 30; ++j) {
        tr2 += h.re(i, j) * h.re(i, j);
        if (h.is_complex()) tr2 += h.im(i, j) * h.im(i, j);
      }
    }
    for (double l : sd.lambda) {
      sl += l;
      sl2 += l * l;
    }
    CHECK(sl == doctest::Approx(tr).epsilon(1e-9));
    CHECK(sl2 == doctest::Approx(tr2).epsilon(1e-9));
  }
}

TEST_CASE("small-n eigenvalues agree with the characteristic-polynomial route") {
  Rng rng(3);
  for (std::size_t n : {std::size_t{4}, std::size_t{9}, std::size_t{12}}) {
    linalg::Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      a(i, i) = rng.next_gaussian();
      for (std::size_t j = i + 1; j < n; ++j) {
        const double v = rng.next_gaussian();
        a(i, j) = v;
        a(j, i) = v;
      }
    }
    const auto got = spectral::eigenvalues_of(a);
    const auto want = oracles::jacobi_eigenvalues(a);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-8));
    }
  }
}

TEST_CASE("gap_stats arithmetic") {
  spectral::SpectralData sd;
  sd.lambda = {1.0, 2.0, 4.0};
  sd.beta = {1.0, 0.0, 0.0};
  const auto g = spectral::gap_stats(sd, 3, 2.0);
  CHECK(g.top_gap == doctest::Approx(2.0));
  CHECK(g.second_gap == doctest::Approx(1.0));

  spectral::SpectralData deg;
  deg.lambda = {0.0, 1.0, 1.0};
  deg.beta = {1.0, 0.0, 0.0};
  CHECK(spectral::gap_stats(deg, 3, 2.0).top_gap == 0.0);

  spectral::SpectralData sd100;
  sd100.lambda.resize(100, 0.0);
  sd100.beta.assign(100, 0.1);
  sd100.lambda[99] = 1.9;
  const auto g100 = spectral::gap_stats(sd100, 100, 2.0);
  CHECK(g100.scaled_edge_triple[0] ==
        doctest::Approx(std::pow(2.0, -2.0 / 3.0) *
                        std::pow(100.0, 2.0 / 3.0) * 0.1)
            .epsilon(1e-12));
  CHECK(g100.scaled_edge_triple[0] == doctest::Approx(1.357).epsilon(1e-3));

  CHECK_THROWS_AS(spectral::gap_stats(sd, 2, 2.0), ParameterError);
}

TEST_CASE("semicircle quantile: closed form vs quadrature oracle") {
  CHECK(std::fabs(spectral::semicircle_quantile(0.5)) < 1e-12);
  CHECK(spectral::semicircle_quantile(1.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(spectral::semicircle_quantile(0.0), ParameterError);
  CHECK_THROWS_AS(spectral::semicircle_quantile(1.5), ParameterError);

  const double q25 = spectral::semicircle_quantile(0.25);
  CHECK(q25 > -1.0);
  CHECK(q25 < 0.0);
  CHECK(q25 == doctest::Approx(oracles::semicircle_quantile_quadrature(0.25))
                   .epsilon(1e-9));

  for (double q : {0.01, 0.1, 0.3, 0.5, 0.77, 0.99}) {
    CHECK(spectral::semicircle_cdf(spectral::semicircle_quantile(q)) ==
          doctest::Approx(q).epsilon(1e-10));
  }
}

TEST_CASE("spectral csv export") {
  spectral::SpectralData sd;
  sd.lambda = {-1.0, 1.0};
  sd.beta = {0.6, 0.8};
  std::ostringstream os;
  spectral::write_csv(os, sd);
  CHECK(os.str() == "lambda,beta\n-1,0.59999999999999998\n1,0.80000000000000004\n");
}
