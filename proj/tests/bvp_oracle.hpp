#pragma once

#include "fbcd/semiwave.hpp"

// Independent check on the shooting solver: global Newton on the
// finite-difference two-point BVP with the speed c as an extra unknown
// (bordered tridiagonal Jacobian), Richardson-extrapolated over two grids.
// Test-only code; deliberately shares nothing with src/semiwave.cpp.
double semiwave_speed_oracle(const fbcd::SemiWaveParams& p);
