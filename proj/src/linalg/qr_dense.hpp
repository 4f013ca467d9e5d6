#pragma once

#include "linalg/matrix.hpp"

namespace rml::linalg {

// One unshifted QR iteration map: factor x = QR with diag(R) >= 0, return RQ.
Matrix qr_rq(const Matrix& x);

}  // namespace rml::linalg
