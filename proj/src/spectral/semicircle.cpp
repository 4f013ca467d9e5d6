#include "spectral/semicircle.hpp"

#include <cmath>

#include "common/errors.hpp"

namespace rml::spectral {

double semicircle_cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  constexpr double pi = 3.14159265358979323846;
  return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * pi) +
         std::asin(0.5 * x) / pi;
}

double semicircle_quantile(double q) {
  if (!(q > 0.0) || q > 1.0) {
    throw ParameterError("semicircle_quantile: q must lie in (0, 1]");
  }
  // cdf is flat to the last ulp just below the edge; the smallest b with
  // cdf(b) = 1 is the edge itself.
  if (q == 1.0) return 2.0;
  double lo = -2.0, hi = 2.0;
  // cdf is strictly increasing on [-2, 2]; bisect until the bracket is
  // far below the 1e-12 requirement.
  for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (semicircle_cdf(mid) < q) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> semicircle_quantiles(std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t j = 1; j <= n; ++j) {
    g[j - 1] = semicircle_quantile(static_cast<double>(j) /
                                   static_cast<double>(n));
  }
  return g;
}

}  // namespace rml::spectral
