#include "linalg/ql.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "common/errors.hpp"

namespace rml::linalg {

namespace {
constexpr int kMaxSweeps = 60;
}

void ql_implicit(Tridiagonal& t, std::vector<double>* first_row) {
  const std::size_t n = t.size();
  if (n == 0) return;
  std::vector<double>& d = t.diag;
  std::vector<double> e(n, 0.0);
  std::copy(t.off.begin(), t.off.end(), e.begin());
  const double eps = std::numeric_limits<double>::epsilon();

  // EISPACK-style global deflation scale: a neighbor-relative test never
  // fires on the roundoff-noise tail of strongly graded matrices.
  double tst1 = 0.0;

  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::fabs(d[l]) + std::fabs(e[l]));
    int iter = 0;
    for (;;) {
      std::size_t m = l;
      while (m + 1 < n) {
        if (std::fabs(e[m]) <= eps * tst1) break;
        ++m;
      }
      if (m == l) break;
      if (++iter > kMaxSweeps) {
        throw NumericError("ql_implicit: no convergence at index " +
                           std::to_string(l));
      }
      // Wilkinson-type shift from the leading 2x2 at l.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow_restart = false;
      for (std::size_t ii = m; ii-- > l;) {
        const std::size_t i = ii;
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow_restart = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (first_row) {
          double& wi = (*first_row)[i];
          double& wi1 = (*first_row)[i + 1];
          f = wi1;
          wi1 = s * wi + c * f;
          wi = c * wi - s * f;
        }
      }
      if (underflow_restart) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  std::copy(e.begin(), e.end() - 1, t.off.begin());
}

std::vector<double> eigenvalues(Tridiagonal t) {
  ql_implicit(t, nullptr);
  std::sort(t.diag.begin(), t.diag.end());
  return t.diag;
}

}  // namespace rml::linalg
