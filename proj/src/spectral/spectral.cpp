#include "spectral/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "common/errors.hpp"
#include "linalg/householder.hpp"
#include "linalg/ql.hpp"

namespace rml::spectral {

double SpectralData::top_gap() const {
  const std::size_t m = lambda.size();
  return m >= 2 ? lambda[m - 1] - lambda[m - 2] : 0.0;
}

void SpectralData::validate() const {
  if (lambda.empty() || lambda.size() != beta.size()) {
    throw ContractViolation("SpectralData: inconsistent sizes");
  }
  double sum2 = 0.0;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (j && lambda[j] < lambda[j - 1]) {
      throw ContractViolation("SpectralData: eigenvalues not ascending");
    }
    if (beta[j] < 0.0) throw ContractViolation("SpectralData: beta < 0");
    sum2 += beta[j] * beta[j];
  }
  if (std::fabs(sum2 - 1.0) > 1e-10) {
    throw ContractViolation("SpectralData: sum beta^2 != 1");
  }
}

namespace {

void check_self_adjoint(const ensembles::RandomMatrix& h) {
  const std::size_t n = h.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (h.re(i, j) != h.re(j, i)) {
        throw ContractViolation("matrix is not self-adjoint");
      }
      if (h.is_complex()) {
        const bool diag_ok = i != j || h.im(i, i) == 0.0;
        if (!diag_ok || h.im(i, j) != -h.im(j, i)) {
          throw ContractViolation("matrix is not self-adjoint");
        }
      }
    }
  }
}

}  // namespace

linalg::Tridiagonal tridiagonalize(const ensembles::RandomMatrix& h) {
  check_self_adjoint(h);
  if (h.is_complex()) {
    return linalg::tridiagonalize_hermitian(h.re, h.im);
  }
  return linalg::tridiagonalize_symmetric(h.re);
}

linalg::Tridiagonal tridiagonalize(const linalg::Matrix& sym) {
  const std::size_t n = sym.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sym(i, j) != sym(j, i)) {
        throw ContractViolation("matrix is not symmetric");
      }
  return linalg::tridiagonalize_symmetric(sym);
}

SpectralData eigen_full(const linalg::Tridiagonal& t) {
  const std::size_t n = t.size();
  linalg::Tridiagonal work = t;
  std::vector<double> first_row(n, 0.0);
  if (n > 0) first_row[0] = 1.0;
  linalg::ql_implicit(work, &first_row);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return work.diag[a] < work.diag[b];
  });

  SpectralData sd;
  sd.lambda.resize(n);
  sd.beta.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    sd.lambda[j] = work.diag[order[j]];
    sd.beta[j] = std::fabs(first_row[order[j]]);
  }
  return sd;
}

SpectralData analyze(const ensembles::RandomMatrix& h) {
  return eigen_full(tridiagonalize(h));
}

SpectralData analyze(const linalg::Matrix& sym) {
  return eigen_full(tridiagonalize(sym));
}

std::vector<double> eigenvalues_of(const linalg::Matrix& sym) {
  return linalg::eigenvalues(linalg::tridiagonalize_symmetric(sym));
}

GapStatistics gap_stats(const SpectralData& sd, std::size_t n, double b_v) {
  if (n < 3 || sd.n() < 3) throw ParameterError("gap_stats requires n >= 3");
  GapStatistics g;
  const auto& l = sd.lambda;
  const std::size_t m = l.size();
  g.top_gap = l[m - 1] - l[m - 2];
  g.second_gap = l[m - 2] - l[m - 3];
  const double scale =
      std::pow(2.0, -2.0 / 3.0) * std::pow(static_cast<double>(n), 2.0 / 3.0);
  for (std::size_t k = 0; k < 3; ++k) {
    g.scaled_edge_triple[k] = scale * (b_v - l[m - 1 - k]);
  }
  return g;
}

void write_csv(std::ostream& os, const SpectralData& sd) {
  os << "lambda,beta\n";
  char buf[64];
  for (std::size_t j = 0; j < sd.n(); ++j) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", sd.lambda[j], sd.beta[j]);
    os << buf;
  }
}

}  // namespace rml::spectral
