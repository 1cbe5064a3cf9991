#pragma once

#include <array>

#include "entx/hamiltonians.hpp"
#include "entx/states.hpp"

namespace entx {

struct ConcurrenceResult {
  double value;                    // max(0, l1 - l2 - l3 - l4)
  std::array<double, 4> lambdas;   // descending
};

//! Two-qubit concurrence: with rho_tilde = (sigma_y (x) sigma_y) rho^*
//! (sigma_y (x) sigma_y), the lambdas are the square roots of the descending
//! eigenvalues of rho rho_tilde, computed through the similar Hermitian form
//! sqrt(rho) rho_tilde sqrt(rho).
ConcurrenceResult concurrence(const DensityMatrix& rho);

//! Closed-form concurrence 2|s_a c_a s_b| / (s_a^2 + c_a^2 s_b^2) of the
//! state extracted by the standard three-pass recipe. Throws
//! DegenerateStateError when the denominator vanishes (no state is
//! extracted there).
double analytic_concurrence(const CouplingParams& params);

//! Closed-form success probability of the standard recipe per unit of the
//! |down down> population: 4 s_a^2 c_a^2 s_b^2 (1 - c_a^2 c_b^2).
double analytic_yield(const CouplingParams& params);

//! The extracted pure state (c_a s_b |up down> + s_a |down up>) normalized.
//! Throws DegenerateStateError when the normalization vanishes.
PureState target_state(const CouplingParams& params);

//! Whether the parameters satisfy tan^2(theta_a) = sin^2(theta_b), the
//! condition for unit concurrence. Near the tangent pole the equivalent
//! polynomial form s_a^2 = c_a^2 s_b^2 is used.
bool max_condition(const CouplingParams& params, double tol = 1e-9);

}  // namespace entx
