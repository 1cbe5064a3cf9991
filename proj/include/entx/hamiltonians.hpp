#pragma once

#include "entx/linalg.hpp"

namespace entx {

//! Dimensionless protocol parameters. The dynamics depend on the couplings
//! and durations only through the products theta = g * tau; omega_t is the
//! free-evolution phase angle (energy gap times duration) accumulated per
//! interaction interval, kept for the full-picture toggle.
struct CouplingParams {
  double theta_a = 0.0;  // g_A * tau_A
  double theta_b = 0.0;  // g_B * tau_B
  double omega_t = 0.0;  // Omega * tau, default 0 (interaction picture)
};

enum class Coupling { XA, XB };

// All operators act on the 8-dim A (x) B (x) X space, |up> = index 0.

//! Free Hamiltonian (omega/2)(sigma_z^A + sigma_z^B + sigma_z^X); diagonal.
ComplexMatrix h_free(double omega);

//! Excitation-exchange coupling g (sigma_+^X sigma_-^A + sigma_-^X sigma_+^A).
ComplexMatrix h_int_xa(double g);

//! Same coupling between X and B.
ComplexMatrix h_int_xb(double g);

//! Total number of up-spins across A, B, X; diagonal with entries 0..3.
//! Commutes with the free Hamiltonian and both couplings.
ComplexMatrix excitation_number();

//! exp(-i (H_free [if include_free] + H_int) tau) for one interaction
//! interval, expressed through the dimensionless angles: the interaction
//! generator enters as h_int(theta) and the free generator as h_free(omega_t).
ComplexMatrix propagator(Coupling which, const CouplingParams& params,
                         bool include_free = false);

}  // namespace entx
