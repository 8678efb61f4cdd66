#pragma once

#include <vector>

#include "core/common.hpp"

namespace eur {

// Hyperspherical chart parameters for a pure state in dimension d:
// d-1 polar angles in [0, pi/2] and d-1 phases in [0, 2*pi).
struct StateParams {
  std::vector<double> angles;
  std::vector<double> phases;

  int dim() const { return static_cast<int>(angles.size()) + 1; }
};

// Normalizes and fixes the global phase: the largest-magnitude amplitude is
// made real non-negative (ties break toward the lowest index). Throws
// DomainError if the input norm is zero and NumericError if it deviates from
// 1 by more than 1e-6 (callers are expected to pass states, not arbitrary
// vectors).
Vec canonicalize(const Vec& psi);

// sqrt(1 - |<a|b>|^2): global-phase-invariant distance between rays.
double fidelity_distance(const Vec& a, const Vec& b);

// Product-of-sines chart. The last component carries no phase and is
// real non-negative by construction; for d=4 the final block is oriented so
// that all-zero parameters give |3> and (pi/2, pi/2, 0, ...) gives |0>.
Vec state_from_params(const StateParams& p);
Vec state_from_params_flat(const double* x, int d);  // [angles..., phases...]

// Inverse chart. Phases of vanishing amplitudes are reported as 0; the global
// phase is fixed internally so the round trip reproduces the ray exactly.
StateParams params_from_state(const Vec& psi);

std::vector<double> params_to_flat(const StateParams& p);
StateParams params_from_flat(const std::vector<double>& x, int d);

}  // namespace eur
