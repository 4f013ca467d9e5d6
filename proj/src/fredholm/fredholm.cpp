#include "fredholm/fredholm.hpp"

#include <cmath>

#include "common/errors.hpp"
#include "linalg/cholesky.hpp"
#include "linalg/householder.hpp"
#include "linalg/ql.hpp"

namespace rml::fredholm {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

GaussLegendre gauss_legendre(std::size_t n) {
  if (n < 1) throw ParameterError("gauss_legendre: n must be >= 1");
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Chebyshev-based initial guess for the i-th root (descending), then
    // Newton on the three-term recurrence.
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        const double jd = static_cast<double>(j);
        p0 = ((2.0 * jd + 1.0) * x * p1 - jd * p2) / (jd + 1.0);
      }
      dp = static_cast<double>(n) * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;  // ascending from the left end
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

KernelDiscretization discretize(double s, std::size_t n) {
  if (!(s > 0.0)) throw ParameterError("discretize: s must be positive");
  if (n < 4) throw ParameterError("discretize: need at least 4 nodes");

  KernelDiscretization d;
  d.s = s;
  d.n = n;
  d.rule = gauss_legendre(n);
  d.m = linalg::Matrix(n, n);

  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) sq[i] = std::sqrt(d.rule.weights[i]);

  for (std::size_t i = 0; i < n; ++i) {
    d.m(i, i) = sq[i] * (s / kPi) * sq[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const double diff = d.rule.nodes[i] - d.rule.nodes[j];
      const double k = std::sin(s * diff) / (kPi * diff);
      const double v = sq[i] * k * sq[j];
      d.m(i, j) = v;
      d.m(j, i) = v;
    }
  }
  return d;
}

double determinant_raw(const KernelDiscretization& d) {
  linalg::Matrix a(d.n, d.n);
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = 0; j < d.n; ++j) {
      a(i, j) = (i == j ? 1.0 : 0.0) - d.m(i, j);
    }
  }
  return linalg::spd_determinant(std::move(a));
}

DetResult determinant(const KernelDiscretization& d) {
  DetResult r;
  r.value = determinant_raw(d);
  r.refinement_delta = std::fabs(r.value - determinant_raw(discretize(d.s, 2 * d.n)));
  r.converged = r.refinement_delta < 1e-10;
  return r;
}

std::vector<double> eigenvalues(const KernelDiscretization& d) {
  auto ev = linalg::eigenvalues(linalg::tridiagonalize_symmetric(d.m));
  // ascending from the solver; report descending and clamp roundoff
  std::vector<double> out(ev.rbegin(), ev.rend());
  for (double& v : out) {
    if (v < 0.0) {
      if (v < -1e-10) {
        throw NumericError("sine-kernel eigenvalue below -1e-10");
      }
      v = 0.0;
    }
    if (v >= 1.0) {
      throw NumericError("sine-kernel eigenvalue >= 1 (not trace class?)");
    }
  }
  return out;
}

ProductIdentity product_identity(const KernelDiscretization& d) {
  ProductIdentity p;
  p.det = determinant_raw(d);
  p.product = 1.0;
  for (double lam : eigenvalues(d)) p.product *= 1.0 - lam;
  p.difference = std::fabs(p.det - p.product);
  return p;
}

GapProbability gap_probability(double s, std::size_t n_start) {
  GapProbability g;
  std::size_t n = n_start < 4 ? 4 : n_start;
  double prev = determinant_raw(discretize(s, n));
  while (2 * n <= 1280) {
    const double next = determinant_raw(discretize(s, 2 * n));
    g.refinement_delta = std::fabs(next - prev);
    if (g.refinement_delta < 1e-10) {
      g.value = prev;
      g.n_used = n;
      g.converged = true;
      return g;
    }
    prev = next;
    n *= 2;
  }
  g.value = prev;
  g.n_used = n;
  g.converged = false;
  return g;
}

}  // namespace rml::fredholm
