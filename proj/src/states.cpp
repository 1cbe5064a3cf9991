#include "entx/states.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace entx {

namespace {

constexpr int kMaxQubits = 3;

void require_register_size(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("register size must be between 1 and 3 qubits, got " +
                                std::to_string(num_qubits));
  }
}

//! Standard normal deviates from the raw mt19937_64 stream (Box-Muller over
//! 53-bit uniforms), so the sequence does not depend on the standard
//! library's distribution internals.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) {
      u1 = uniform();
    }
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * M_PI * u2;
    spare_ = r * std::sin(phi);
    have_spare_ = true;
    return r * std::cos(phi);
  }

 private:
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace

std::string to_string(Spin s) { return s == Spin::up ? "up" : "down"; }

Spin spin_from_string(const std::string& s) {
  if (s == "up") {
    return Spin::up;
  }
  if (s == "down") {
    return Spin::down;
  }
  throw std::invalid_argument("unknown spin label '" + s + "' (expected \"up\" or \"down\")");
}

PureState::PureState(int num_qubits, ComplexVector amplitudes, double tol)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  require_register_size(num_qubits_);
  const Eigen::Index dim = Eigen::Index{1} << num_qubits_;
  if (amplitudes_.size() != dim) {
    throw std::invalid_argument("pure state amplitude count does not match register size");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > tol) {
    throw std::invalid_argument("pure state is not normalized");
  }
}

ComplexMatrix PureState::projector() const {
  return amplitudes_ * amplitudes_.adjoint();
}

DensityMatrix::DensityMatrix(int num_qubits, ComplexMatrix matrix, double tol)
    : num_qubits_(num_qubits), matrix_(std::move(matrix)) {
  require_register_size(num_qubits_);
  const Eigen::Index dim = Eigen::Index{1} << num_qubits_;
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw std::invalid_argument("density matrix dimension does not match register size");
  }
  if (!linalg::is_hermitian(matrix_, tol)) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace().real() - 1.0) > tol ||
      std::abs(matrix_.trace().imag()) > tol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  const auto eig = linalg::eig_hermitian(matrix_, tol);
  if (eig.eigenvalues.minCoeff() < -tol) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.num_qubits(), psi.projector());
}

PureState basis_state(const std::vector<Spin>& labels) {
  const int n = static_cast<int>(labels.size());
  require_register_size(n);
  Eigen::Index index = 0;
  for (Spin s : labels) {
    index = (index << 1) | (s == Spin::down ? 1 : 0);
  }
  ComplexVector amps = ComplexVector::Zero(Eigen::Index{1} << n);
  amps(index) = 1.0;
  return PureState(n, std::move(amps));
}

DensityMatrix maximally_mixed(int num_qubits) {
  require_register_size(num_qubits);
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  return DensityMatrix(num_qubits,
                       ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix random_density(int num_qubits, std::uint64_t seed) {
  require_register_size(num_qubits);
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  GaussianStream gauss(seed);
  ComplexMatrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = Complex(gauss.next(), gauss.next());
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // GG^dag can pick up a ~1e-16 asymmetry from the matrix product.
  rho = (rho + rho.adjoint().eval()) / 2.0;
  return DensityMatrix(num_qubits, std::move(rho));
}

double fidelity_pure(const DensityMatrix& rho, const PureState& psi) {
  if (rho.dim() != psi.dim()) {
    throw std::invalid_argument("fidelity_pure: state dimensions do not match");
  }
  const Complex f = psi.amplitudes().adjoint() * rho.matrix() * psi.amplitudes();
  return std::clamp(f.real(), 0.0, 1.0);
}

nlohmann::json density_to_json(const DensityMatrix& rho) {
  nlohmann::json rows = nlohmann::json::array();
  const auto& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return {{"schema_version", 1},
          {"num_qubits", rho.num_qubits()},
          {"matrix", std::move(rows)}};
}

DensityMatrix density_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num_qubits") || !j.contains("matrix")) {
    throw std::invalid_argument("density matrix JSON must have num_qubits and matrix fields");
  }
  const int n = j.at("num_qubits").get<int>();
  require_register_size(n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  const auto& rows = j.at("matrix");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(dim)) {
    throw std::invalid_argument("density matrix JSON has wrong number of rows");
  }
  ComplexMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      throw std::invalid_argument("density matrix JSON has wrong number of columns");
    }
    for (Eigen::Index jj = 0; jj < dim; ++jj) {
      const auto& entry = row.at(jj);
      if (!entry.is_array() || entry.size() != 2) {
        throw std::invalid_argument("density matrix entries must be [re, im] pairs");
      }
      m(i, jj) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return DensityMatrix(n, std::move(m));
}

}  // namespace entx
