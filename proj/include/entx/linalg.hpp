#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace entx {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

//! Default absolute tolerance (max-norm) for numerical comparisons.
inline constexpr double kDefaultTol = 1e-10;

namespace linalg {

// Basis convention used throughout: |up> is index 0, |down> is index 1.
// Multi-qubit ordering is A (x) B for 4-dim and A (x) B (x) X for 8-dim,
// with the left factor as the slower-varying index.

ComplexMatrix identity(Eigen::Index n);
ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();
ComplexMatrix sigma_plus();   // |up><down|
ComplexMatrix sigma_minus();  // |down><up|

//! Largest absolute entry (max-norm).
double max_abs(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);

//! Checked matrix product. Throws std::invalid_argument on shape mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

//! Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

//! Kronecker product, left factor slower-varying.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

//! Trace out subsystem `traced_index` (0-based into `dims`) from a square
//! matrix on the tensor product of subsystems with the given dimensions.
//! The remaining factors keep their relative order; total trace is preserved.
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<Eigen::Index>& dims,
                            std::size_t traced_index);

struct EigResult {
  Eigen::VectorXd eigenvalues;  // sorted descending
  ComplexMatrix eigenvectors;   // columns, matching eigenvalue order
};

//! Spectral decomposition m = U diag(lambda) U^dag of a Hermitian matrix.
//! Supported dimensions: 2, 4, 8. Throws std::invalid_argument if the input
//! is not Hermitian within `tol` or has an unsupported dimension.
EigResult eig_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);

//! exp(-i h t) for Hermitian h, computed through the eigendecomposition.
//! The result is unitary to within spectral round-off.
ComplexMatrix matexp_i_hermitian(const ComplexMatrix& h, double t,
                                 double tol = kDefaultTol);

}  // namespace linalg
}  // namespace entx
