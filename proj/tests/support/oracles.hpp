// Reference implementations used only as test oracles. Everything here is
// written independently of the library code paths it checks: naive loops,
// Taylor series, and the non-Hermitian eigenvalue route for concurrence.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "entx/linalg.hpp"

namespace oracles {

using entx::Complex;
using entx::ComplexMatrix;
using entx::ComplexVector;

inline constexpr Complex kI{0.0, 1.0};

//! Entry-by-entry triple-loop product.
inline ComplexMatrix matmul_ref(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Complex sum = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        sum += a(i, k) * b(k, j);
      }
      out(i, j) = sum;
    }
  }
  return out;
}

//! Partial trace by explicit summation over all full-space index pairs.
inline ComplexMatrix partial_trace_ref(const ComplexMatrix& m,
                                       const std::vector<Eigen::Index>& dims,
                                       std::size_t traced) {
  const std::size_t n = dims.size();
  auto coords = [&](Eigen::Index linear) {
    std::vector<Eigen::Index> c(n);
    for (std::size_t k = n; k-- > 0;) {
      c[k] = linear % dims[k];
      linear /= dims[k];
    }
    return c;
  };
  auto kept_linear = [&](const std::vector<Eigen::Index>& c) {
    Eigen::Index linear = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == traced) {
        continue;
      }
      linear = linear * dims[k] + c[k];
    }
    return linear;
  };

  const Eigen::Index d_keep = m.rows() / dims[traced];
  ComplexMatrix out = ComplexMatrix::Zero(d_keep, d_keep);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto ci = coords(i);
      const auto cj = coords(j);
      if (ci[traced] != cj[traced]) {
        continue;
      }
      out(kept_linear(ci), kept_linear(cj)) += m(i, j);
    }
  }
  return out;
}

//! exp(-i h t) by scaling, truncated Taylor series and repeated squaring.
inline ComplexMatrix matexp_taylor(const ComplexMatrix& h, double t) {
  const Eigen::Index n = h.rows();
  ComplexMatrix a = -kI * t * h;
  int squarings = 0;
  while (a.cwiseAbs().maxCoeff() > 0.5) {
    a /= 2.0;
    ++squarings;
  }
  ComplexMatrix result = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = term * a / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) {
      break;
    }
  }
  for (int s = 0; s < squarings; ++s) {
    result = result * result;
  }
  return result;
}

//! Hermitian square root through the library eigensolver (negative spectral
//! noise clamped to zero).
inline ComplexMatrix hermitian_sqrt(const ComplexMatrix& m) {
  const auto eig = entx::linalg::eig_hermitian(m);
  ComplexVector roots(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    roots(k) = std::sqrt(std::max(eig.eigenvalues(k), 0.0));
  }
  return eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
}

//! Mixed-state fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
inline double state_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  const ComplexMatrix root = hermitian_sqrt(rho);
  ComplexMatrix inner = root * sigma * root;
  inner = (inner + inner.adjoint().eval()) / 2.0;
  const auto eig = entx::linalg::eig_hermitian(inner);
  double sum = 0.0;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    sum += std::sqrt(std::max(eig.eigenvalues(k), 0.0));
  }
  return sum * sum;
}

//! Concurrence lambdas the direct way: eigenvalues of the non-Hermitian
//! product rho (yy rho^* yy), square-rooted and sorted descending.
inline std::array<double, 4> wootters_lambdas_ref(const ComplexMatrix& rho) {
  ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
  yy(0, 3) = -1;
  yy(1, 2) = 1;
  yy(2, 1) = 1;
  yy(3, 0) = -1;
  const ComplexMatrix product = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(product);
  std::array<double, 4> lambdas{};
  for (int k = 0; k < 4; ++k) {
    lambdas[static_cast<std::size_t>(k)] =
        std::sqrt(std::max(solver.eigenvalues()(k).real(), 0.0));
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return lambdas;
}

//! Deterministic standard-normal stream for test data.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : rng_(seed) {}

  double operator()() {
    double u1 = uniform();
    while (u1 <= 0.0) {
      u1 = uniform();
    }
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * uniform());
  }

  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 rng_;
};

inline ComplexMatrix random_matrix(Eigen::Index n, Gaussian& g) {
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = Complex(g(), g());
    }
  }
  return m;
}

inline ComplexMatrix random_hermitian(Eigen::Index n, Gaussian& g) {
  const ComplexMatrix m = random_matrix(n, g);
  return (m + m.adjoint()) / 2.0;
}

inline ComplexMatrix random_unitary(Eigen::Index n, Gaussian& g) {
  return matexp_taylor(random_hermitian(n, g), 1.0);
}

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace oracles
