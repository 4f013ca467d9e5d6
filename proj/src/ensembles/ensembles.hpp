#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "linalg/matrix.hpp"

namespace rml::ensembles {

enum class Kind { GOE, GUE, BernoulliReal, BernoulliComplex };

const char* kind_name(Kind k);
Kind kind_from_name(const std::string& name);  // throws ParameterError

// Symmetry class: 1 for real ensembles, 2 for complex ones.
int beta_of(Kind k);

struct EnsembleSpec {
  Kind kind = Kind::GOE;
  std::size_t n = 1;

  int beta() const { return beta_of(kind); }
  void validate() const;  // throws ParameterError if n < 1
};

// Self-adjoint sample. For beta = 1, im is empty; for beta = 2 the imaginary
// part is antisymmetric with zero diagonal. Self-adjointness is exact by
// construction (mirrored assignment, not recomputation).
struct RandomMatrix {
  EnsembleSpec spec;
  linalg::Matrix re;
  linalg::Matrix im;

  bool is_complex() const { return !im.empty(); }
  std::size_t n() const { return re.rows(); }
};

// Normalization: off-diagonal variance 1/n (complex: 1/(2n) per part), GOE
// diagonal variance 2/n, Bernoulli entries on the +-1/sqrt(n) lattice. The
// limiting spectral measure is then the semicircle on [-2, 2], top edge 2.
RandomMatrix sample(const EnsembleSpec& spec, std::uint64_t seed);

// Deterministic stream: matrix k depends only on (master_seed, k), so any
// prefix of a stream, and any parallel sharding of it, reproduces the same
// matrices.
std::vector<RandomMatrix> reseedable_stream(const EnsembleSpec& spec,
                                            std::uint64_t master_seed,
                                            std::size_t count);

// Seed of the k-th stream element; workers use this to sample on demand.
std::uint64_t stream_seed(std::uint64_t master_seed, std::size_t index);

// Row-major CSV; complex matrices interleave re,im per entry.
void write_csv(std::ostream& os, const RandomMatrix& m);

}  // namespace rml::ensembles
