#include "entx/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entx/errors.hpp"

namespace entx {

namespace {

constexpr double kDegenerateEps = 1e-12;
constexpr double kSpectralFloor = -1e-10;

ComplexMatrix spin_flip_conjugation(const ComplexMatrix& rho) {
  const ComplexMatrix yy = linalg::tensor(linalg::sigma_y(), linalg::sigma_y());
  return yy * rho.conjugate() * yy;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m) {
  const auto eig = linalg::eig_hermitian(m);
  ComplexVector roots(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    roots(k) = std::sqrt(std::max(eig.eigenvalues(k), 0.0));
  }
  return eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace

ConcurrenceResult concurrence(const DensityMatrix& rho) {
  if (rho.num_qubits() != 2) {
    throw std::invalid_argument("concurrence is defined for 2-qubit states");
  }
  const ComplexMatrix flipped = spin_flip_conjugation(rho.matrix());
  const ComplexMatrix root = hermitian_sqrt(rho.matrix());
  // sqrt(rho) rho~ sqrt(rho) is Hermitian PSD and similar to rho rho~,
  // so it shares its eigenvalues.
  ComplexMatrix product = root * flipped * root;
  product = (product + product.adjoint().eval()) / 2.0;

  const auto eig = linalg::eig_hermitian(product);
  ConcurrenceResult result{};
  for (int k = 0; k < 4; ++k) {
    const double ev = eig.eigenvalues(k);
    if (ev < kSpectralFloor) {
      throw std::runtime_error("concurrence: spectral noise below tolerance floor");
    }
    result.lambdas[static_cast<std::size_t>(k)] = std::sqrt(std::max(ev, 0.0));
  }
  result.value = std::max(0.0, result.lambdas[0] - result.lambdas[1] -
                                   result.lambdas[2] - result.lambdas[3]);
  return result;
}

double analytic_concurrence(const CouplingParams& params) {
  const double sa = std::sin(params.theta_a);
  const double ca = std::cos(params.theta_a);
  const double sb = std::sin(params.theta_b);
  const double denom = sa * sa + ca * ca * sb * sb;
  if (denom <= kDegenerateEps) {
    throw DegenerateStateError("extracted state is undefined: normalization vanishes");
  }
  return 2.0 * std::abs(sa * ca * sb) / denom;
}

double analytic_yield(const CouplingParams& params) {
  const double sa = std::sin(params.theta_a);
  const double ca = std::cos(params.theta_a);
  const double sb = std::sin(params.theta_b);
  const double cb = std::cos(params.theta_b);
  return 4.0 * sa * sa * ca * ca * sb * sb * (1.0 - ca * ca * cb * cb);
}

PureState target_state(const CouplingParams& params) {
  const double sa = std::sin(params.theta_a);
  const double ca = std::cos(params.theta_a);
  const double sb = std::sin(params.theta_b);
  const double cb = std::cos(params.theta_b);
  const double norm_sq = 1.0 - ca * ca * cb * cb;
  if (norm_sq <= kDegenerateEps) {
    throw DegenerateStateError("extracted state is undefined: normalization vanishes");
  }
  ComplexVector amps = ComplexVector::Zero(4);
  amps(1) = ca * sb / std::sqrt(norm_sq);  // |up down>
  amps(2) = sa / std::sqrt(norm_sq);       // |down up>
  return PureState(2, std::move(amps));
}

bool max_condition(const CouplingParams& params, double tol) {
  const double sa = std::sin(params.theta_a);
  const double ca = std::cos(params.theta_a);
  const double sb = std::sin(params.theta_b);
  if (ca * ca <= kDegenerateEps) {
    // Tangent pole: fall back to the polynomial form s_a^2 = c_a^2 s_b^2,
    // which cannot hold there since s_a^2 = 1.
    return std::abs(sa * sa - ca * ca * sb * sb) < tol;
  }
  const double tan_sq = (sa * sa) / (ca * ca);
  return std::abs(tan_sq - sb * sb) < tol;
}

}  // namespace entx
