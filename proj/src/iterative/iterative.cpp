#include "iterative/iterative.hpp"

#include <algorithm>
#include <cmath>

#include "common/errors.hpp"
#include "common/rng.hpp"
#include "kernels/kernels.hpp"
#include "linalg/qr_dense.hpp"

namespace rml::iterative {

namespace {

double first_row_offdiag_norm(const linalg::Matrix& x) {
  double s = 0.0;
  for (std::size_t j = 1; j < x.cols(); ++j) s += x(0, j) * x(0, j);
  return std::sqrt(s);
}

void require_symmetric(const linalg::Matrix& x) {
  double scale = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      scale = std::max(scale, std::fabs(x(i, j)));
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = i + 1; j < x.cols(); ++j)
      if (std::fabs(x(i, j) - x(j, i)) > 1e-12 * std::max(1.0, scale)) {
        throw ContractViolation("qr_step: input not symmetric");
      }
}

void matvec(const linalg::Matrix& a, const std::vector<double>& x,
            std::vector<double>& y) {
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    y[i] = k.dot(a.row(i), x.data(), x.size());
  }
}

double norm2(const std::vector<double>& v) {
  return std::sqrt(kernels::active().dot(v.data(), v.data(), v.size()));
}

}  // namespace

linalg::Matrix qr_step(const linalg::Matrix& x) {
  require_symmetric(x);
  return linalg::qr_rq(x);
}

QrRun qr_halting(const linalg::Matrix& h, double eps, std::size_t k_max) {
  if (!(eps > 0.0) || eps >= 1.0) {
    throw ParameterError("qr_halting: eps must lie in (0, 1)");
  }
  if (k_max < 1) throw ParameterError("qr_halting: k_max must be >= 1");

  QrRun run;
  linalg::Matrix x = h;
  run.residuals.push_back(first_row_offdiag_norm(x));
  while (run.residuals.back() >= eps) {
    if (run.k >= k_max) {
      run.halted = false;
      for (std::size_t i = 0; i < x.rows(); ++i)
        run.final_diag.push_back(x(i, i));
      return run;
    }
    x = qr_step(x);
    ++run.k;
    run.residuals.push_back(first_row_offdiag_norm(x));
  }
  run.halted = true;
  for (std::size_t i = 0; i < x.rows(); ++i) run.final_diag.push_back(x(i, i));
  return run;
}

LinearSystem wishart_system(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 1) throw ParameterError("wishart_system: n must be >= 1");
  if (m < n) {
    throw ParameterError("wishart_system: m >= n required (A singular otherwise)");
  }
  Rng rng(seed);
  linalg::Matrix w(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) w(i, j) = rng.next_gaussian();

  LinearSystem sys;
  sys.a = linalg::Matrix(n, n);
  const auto& k = kernels::active();
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = inv_m * k.dot(w.row(i), w.row(j), m);
      sys.a(i, j) = v;
      sys.a(j, i) = v;
    }
  }
  sys.b.resize(n);
  for (std::size_t i = 0; i < n; ++i) sys.b[i] = rng.next_gaussian();
  const double bn = norm2(sys.b);
  for (auto& v : sys.b) v /= bn;
  return sys;
}

CgRun cg_halting(const linalg::Matrix& a, const std::vector<double>& b,
                 double eps, std::size_t k_max) {
  const std::size_t n = b.size();
  if (a.rows() != n || a.cols() != n) {
    throw ParameterError("cg_halting: dimension mismatch");
  }
  if (!(eps > 0.0)) throw ParameterError("cg_halting: eps must be positive");

  const auto& kr = kernels::active();
  CgRun run;
  run.x.assign(n, 0.0);
  std::vector<double> r = b;          // residual recurrence
  std::vector<double> p = b;          // search direction
  std::vector<double> ap(n), true_r(n);

  run.residuals.push_back(norm2(b));  // ||b - A*0||
  if (run.residuals.back() < eps) {
    run.halted = true;
    return run;
  }

  double rr = kr.dot(r.data(), r.data(), n);
  while (run.k < k_max) {
    matvec(a, p, ap);
    const double pap = kr.dot(p.data(), ap.data(), n);
    if (!(pap > 0.0)) {
      throw NumericError("cg_halting: direction with nonpositive curvature "
                         "(matrix not positive definite?)");
    }
    const double alpha = rr / pap;
    kr.axpy(alpha, p.data(), run.x.data(), n);
    kr.axpy(-alpha, ap.data(), r.data(), n);
    ++run.k;

    // true residual, recomputed
    matvec(a, run.x, true_r);
    for (std::size_t i = 0; i < n; ++i) true_r[i] = b[i] - true_r[i];
    run.residuals.push_back(norm2(true_r));
    if (run.residuals.back() < eps) {
      run.halted = true;
      return run;
    }

    const double rr_new = kr.dot(r.data(), r.data(), n);
    const double beta = rr_new / rr;
    rr = rr_new;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
  }
  run.halted = false;
  return run;
}

}  // namespace rml::iterative
