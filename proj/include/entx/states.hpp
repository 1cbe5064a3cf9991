#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "entx/linalg.hpp"

namespace entx {

enum class Spin { up, down };

std::string to_string(Spin s);
Spin spin_from_string(const std::string& s);

//! Normalized pure state on a 1-3 qubit register.
class PureState {
 public:
  //! Validates unit norm within `tol`.
  PureState(int num_qubits, ComplexVector amplitudes, double tol = kDefaultTol);

  int num_qubits() const noexcept { return num_qubits_; }
  Eigen::Index dim() const noexcept { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }

  //! Rank-one projector |psi><psi|.
  ComplexMatrix projector() const;

 private:
  int num_qubits_;
  ComplexVector amplitudes_;
};

//! Hermitian, unit-trace, positive-semidefinite matrix on a 1-3 qubit
//! register. All three invariants are validated on construction.
class DensityMatrix {
 public:
  DensityMatrix(int num_qubits, ComplexMatrix matrix, double tol = kDefaultTol);

  static DensityMatrix from_pure(const PureState& psi);

  int num_qubits() const noexcept { return num_qubits_; }
  Eigen::Index dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  int num_qubits_;
  ComplexMatrix matrix_;
};

//! Computational basis vector; labels run from the slowest-varying qubit,
//! so (up, down, up) sits at index 0*4 + 1*2 + 0 = 2.
PureState basis_state(const std::vector<Spin>& labels);

//! Identity / 2^n.
DensityMatrix maximally_mixed(int num_qubits);

//! Full-rank random density matrix G G^dag / Tr(G G^dag) with G a seeded
//! complex Gaussian matrix. Deterministic per seed.
DensityMatrix random_density(int num_qubits, std::uint64_t seed);

//! <psi| rho |psi>, clamped to [0, 1].
double fidelity_pure(const DensityMatrix& rho, const PureState& psi);

// JSON schema: {"schema_version": 1, "num_qubits": n,
//               "matrix": row-major nested arrays of [re, im] pairs}
nlohmann::json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

}  // namespace entx
