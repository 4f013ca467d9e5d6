#pragma once

#include "linalg/matrix.hpp"

namespace rml::linalg {

// Reduce a real symmetric matrix to tridiagonal form by Householder
// reflectors that act only on coordinates k+1..n-1, so the accumulated
// transform fixes e_1. The input matrix is consumed as workspace.
Tridiagonal tridiagonalize_symmetric(Matrix a);

// Hermitian reduction on split real/imaginary storage (re symmetric, im
// antisymmetric). The complex subdiagonal phases are absorbed into a diagonal
// unitary whose first entry is 1, so the returned off-diagonals are the
// moduli and the first coordinate is still fixed.
Tridiagonal tridiagonalize_hermitian(Matrix re, Matrix im);

}  // namespace rml::linalg
