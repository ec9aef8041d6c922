#pragma once
// Small exact linear algebra over Q.

#include "wf/lattice.hpp"

namespace wf {

// Solve A x = b for square invertible A. Throws std::domain_error if singular.
RVec solve_rational(const IntMat& A, const RVec& b);

// Pairing of a rational vector with an integer vector.
Rat rdot(const RVec& a, const Vec& b);

}  // namespace wf
