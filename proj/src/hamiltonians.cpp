#include "entx/hamiltonians.hpp"

namespace entx {

namespace {

using linalg::identity;
using linalg::sigma_minus;
using linalg::sigma_plus;
using linalg::sigma_z;
using linalg::tensor;

ComplexMatrix on_a(const ComplexMatrix& op) {
  return tensor(op, identity(4));
}

ComplexMatrix on_b(const ComplexMatrix& op) {
  return tensor(identity(2), tensor(op, identity(2)));
}

ComplexMatrix on_x(const ComplexMatrix& op) {
  return tensor(identity(4), op);
}

}  // namespace

ComplexMatrix h_free(double omega) {
  return (omega / 2.0) * (on_a(sigma_z()) + on_b(sigma_z()) + on_x(sigma_z()));
}

ComplexMatrix h_int_xa(double g) {
  const ComplexMatrix swap_up = on_x(sigma_plus()) * on_a(sigma_minus());
  return g * (swap_up + swap_up.adjoint().eval());
}

ComplexMatrix h_int_xb(double g) {
  const ComplexMatrix swap_up = on_x(sigma_plus()) * on_b(sigma_minus());
  return g * (swap_up + swap_up.adjoint().eval());
}

ComplexMatrix excitation_number() {
  const ComplexMatrix counter = (identity(2) + sigma_z()) / 2.0;
  return on_a(counter) + on_b(counter) + on_x(counter);
}

ComplexMatrix propagator(Coupling which, const CouplingParams& params,
                         bool include_free) {
  const double theta = which == Coupling::XA ? params.theta_a : params.theta_b;
  ComplexMatrix generator =
      which == Coupling::XA ? h_int_xa(theta) : h_int_xb(theta);
  if (include_free) {
    generator += h_free(params.omega_t);
  }
  return linalg::matexp_i_hermitian(generator, 1.0);
}

}  // namespace entx
