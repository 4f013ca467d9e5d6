#pragma once

#include <vector>

#include "linalg/matrix.hpp"

namespace rml::linalg {

// Implicit-shift QL on a symmetric tridiagonal matrix (EISPACK tql lineage,
// Wilkinson shift from the leading 2x2). Eigenvalues overwrite t.diag in no
// particular order; if first_row is non-null it must hold the current first
// row of the accumulated similarity (e_1 for a fresh reduction) and is
// updated by every Givens rotation, i.e. it ends as the first row of the
// eigenvector matrix, column-aligned with the returned eigenvalues.
//
// Throws NumericError with the stuck index if any eigenvalue fails to
// converge within the iteration cap.
void ql_implicit(Tridiagonal& t, std::vector<double>* first_row);

// Eigenvalues of a symmetric tridiagonal, ascending.
std::vector<double> eigenvalues(Tridiagonal t);

}  // namespace rml::linalg
