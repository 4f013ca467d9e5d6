#include "ensembles/ensembles.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "common/errors.hpp"
#include "common/rng.hpp"

namespace rml::ensembles {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::GOE: return "goe";
    case Kind::GUE: return "gue";
    case Kind::BernoulliReal: return "bernoulli";
    case Kind::BernoulliComplex: return "bernoulli-complex";
  }
  return "?";
}

Kind kind_from_name(const std::string& name) {
  if (name == "goe") return Kind::GOE;
  if (name == "gue") return Kind::GUE;
  if (name == "bernoulli") return Kind::BernoulliReal;
  if (name == "bernoulli-complex") return Kind::BernoulliComplex;
  throw ParameterError("unknown ensemble kind '" + name + "'");
}

int beta_of(Kind k) {
  return (k == Kind::GUE || k == Kind::BernoulliComplex) ? 2 : 1;
}

void EnsembleSpec::validate() const {
  if (n < 1) throw ParameterError("ensemble dimension must be >= 1");
}

std::uint64_t stream_seed(std::uint64_t master_seed, std::size_t index) {
  return derive_seed(master_seed, static_cast<std::uint64_t>(index));
}

RandomMatrix sample(const EnsembleSpec& spec, std::uint64_t seed) {
  spec.validate();
  const std::size_t n = spec.n;
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  Rng rng(seed);

  RandomMatrix m;
  m.spec = spec;
  m.re = linalg::Matrix(n, n);
  if (beta_of(spec.kind) == 2) m.im = linalg::Matrix(n, n);

  switch (spec.kind) {
    case Kind::GOE: {
      const double diag_scale = std::sqrt(2.0 / static_cast<double>(n));
      for (std::size_t i = 0; i < n; ++i) {
        m.re(i, i) = diag_scale * rng.next_gaussian();
        for (std::size_t j = i + 1; j < n; ++j) {
          const double g = inv_sqrt_n * rng.next_gaussian();
          m.re(i, j) = g;
          m.re(j, i) = g;
        }
      }
      break;
    }
    case Kind::GUE: {
      const double part_scale = 1.0 / std::sqrt(2.0 * static_cast<double>(n));
      for (std::size_t i = 0; i < n; ++i) {
        m.re(i, i) = inv_sqrt_n * rng.next_gaussian();
        for (std::size_t j = i + 1; j < n; ++j) {
          const double gr = part_scale * rng.next_gaussian();
          const double gi = part_scale * rng.next_gaussian();
          m.re(i, j) = gr;
          m.re(j, i) = gr;
          m.im(i, j) = gi;
          m.im(j, i) = -gi;
        }
      }
      break;
    }
    case Kind::BernoulliReal: {
      for (std::size_t i = 0; i < n; ++i) {
        m.re(i, i) = rng.next_bool() ? inv_sqrt_n : -inv_sqrt_n;
        for (std::size_t j = i + 1; j < n; ++j) {
          const double v = rng.next_bool() ? inv_sqrt_n : -inv_sqrt_n;
          m.re(i, j) = v;
          m.re(j, i) = v;
        }
      }
      break;
    }
    case Kind::BernoulliComplex: {
      // Diagonal must be real for self-adjointness; +-1/sqrt(n) keeps the
      // GUE diagonal variance 1/n.
      const double part = 1.0 / std::sqrt(2.0 * static_cast<double>(n));
      for (std::size_t i = 0; i < n; ++i) {
        m.re(i, i) = rng.next_bool() ? inv_sqrt_n : -inv_sqrt_n;
        for (std::size_t j = i + 1; j < n; ++j) {
          const double vr = rng.next_bool() ? part : -part;
          const double vi = rng.next_bool() ? part : -part;
          m.re(i, j) = vr;
          m.re(j, i) = vr;
          m.im(i, j) = vi;
          m.im(j, i) = -vi;
        }
      }
      break;
    }
  }
  return m;
}

std::vector<RandomMatrix> reseedable_stream(const EnsembleSpec& spec,
                                            std::uint64_t master_seed,
                                            std::size_t count) {
  if (count < 1) throw ParameterError("stream count must be >= 1");
  std::vector<RandomMatrix> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(sample(spec, stream_seed(master_seed, k)));
  }
  return out;
}

void write_csv(std::ostream& os, const RandomMatrix& m) {
  const std::size_t n = m.n();
  char buf[32];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) os << ',';
      std::snprintf(buf, sizeof buf, "%.17g", m.re(i, j));
      os << buf;
      if (m.is_complex()) {
        std::snprintf(buf, sizeof buf, "%.17g", m.im(i, j));
        os << ',' << buf;
      }
    }
    os << '\n';
  }
}

}  // namespace rml::ensembles
