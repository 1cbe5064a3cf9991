#include "entx/linalg.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace entx::linalg {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_spectral_dim(const ComplexMatrix& m, const char* op) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(op) + ": matrix must be square");
  }
  const auto n = m.rows();
  if (n != 2 && n != 4 && n != 8) {
    throw std::invalid_argument(std::string(op) +
                                ": unsupported dimension " + std::to_string(n) +
                                " (expected 2, 4 or 8)");
  }
}

}  // namespace

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix sigma_x() {
  ComplexMatrix s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

ComplexMatrix sigma_y() {
  ComplexMatrix s(2, 2);
  s << 0, -kI, kI, 0;
  return s;
}

ComplexMatrix sigma_z() {
  ComplexMatrix s(2, 2);
  s << 1, 0, 0, -1;
  return s;
}

ComplexMatrix sigma_plus() {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  s(0, 1) = 1;
  return s;
}

ComplexMatrix sigma_minus() {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  s(1, 0) = 1;
  return s;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    return false;
  }
  return max_abs(m - m.adjoint()) <= tol;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: inner dimensions do not match (" +
                                std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + ")");
  }
  return a * b;
}

ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<Eigen::Index>& dims,
                            std::size_t traced_index) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("partial_trace: matrix must be square");
  }
  const Eigen::Index total = std::accumulate(dims.begin(), dims.end(),
                                             Eigen::Index{1},
                                             std::multiplies<>());
  if (total != m.rows()) {
    throw std::invalid_argument(
        "partial_trace: product of subsystem dimensions (" +
        std::to_string(total) + ") does not match matrix dimension (" +
        std::to_string(m.rows()) + ")");
  }
  if (traced_index >= dims.size()) {
    throw std::invalid_argument("partial_trace: traced_index out of range");
  }
  for (auto d : dims) {
    if (d <= 0) {
      throw std::invalid_argument("partial_trace: subsystem dimensions must be positive");
    }
  }

  // stride[k] = product of dimensions to the right of subsystem k
  std::vector<Eigen::Index> stride(dims.size());
  Eigen::Index acc = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    stride[k] = acc;
    acc *= dims[k];
  }

  const Eigen::Index d_traced = dims[traced_index];
  const Eigen::Index d_keep = total / d_traced;

  // Maps a linear index over the kept subsystems (original order) plus a
  // coordinate on the traced subsystem to a linear index on the full space.
  auto embed = [&](Eigen::Index kept, Eigen::Index s) {
    Eigen::Index full = s * stride[traced_index];
    Eigen::Index rem = kept;
    for (std::size_t k = dims.size(); k-- > 0;) {
      if (k == traced_index) {
        continue;
      }
      full += (rem % dims[k]) * stride[k];
      rem /= dims[k];
    }
    return full;
  };

  ComplexMatrix out = ComplexMatrix::Zero(d_keep, d_keep);
  for (Eigen::Index i = 0; i < d_keep; ++i) {
    for (Eigen::Index j = 0; j < d_keep; ++j) {
      Complex sum = 0;
      for (Eigen::Index s = 0; s < d_traced; ++s) {
        sum += m(embed(i, s), embed(j, s));
      }
      out(i, j) = sum;
    }
  }
  return out;
}

EigResult eig_hermitian(const ComplexMatrix& m, double tol) {
  require_spectral_dim(m, "eig_hermitian");
  if (!is_hermitian(m, tol)) {
    throw std::invalid_argument("eig_hermitian: matrix is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: eigensolver failed to converge");
  }
  // Eigen sorts ascending; the contract is descending.
  EigResult res;
  res.eigenvalues = solver.eigenvalues().reverse();
  res.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return res;
}

ComplexMatrix matexp_i_hermitian(const ComplexMatrix& h, double t, double tol) {
  const EigResult eig = eig_hermitian(h, tol);
  const Eigen::Index n = h.rows();
  ComplexVector phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    phases(k) = std::exp(-kI * eig.eigenvalues(k) * t);
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace entx::linalg
