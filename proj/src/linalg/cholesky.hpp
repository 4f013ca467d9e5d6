#pragma once

#include <vector>

#include "linalg/matrix.hpp"

namespace rml::linalg {

// In-place lower Cholesky of a symmetric positive-definite matrix.
// Throws NumericError if a pivot is not strictly positive.
void cholesky(Matrix& a);

// det(a) for SPD a, via Cholesky (product of squared pivots).
double spd_determinant(Matrix a);

// Solve a x = b for SPD a.
std::vector<double> spd_solve(Matrix a, std::vector<double> b);

}  // namespace rml::linalg
