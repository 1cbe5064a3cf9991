#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "entx/linalg.hpp"
#include "support/oracles.hpp"

using entx::Complex;
using entx::ComplexMatrix;
using namespace entx::linalg;
using oracles::max_diff;

namespace {

//! Random matrix with small integer entries; products of these are exact
//! in double precision.
ComplexMatrix random_int_matrix(Eigen::Index n, oracles::Gaussian& g) {
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = Complex(std::floor(g.uniform(-4.0, 5.0)),
                        std::floor(g.uniform(-4.0, 5.0)));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("matmul") {
  SUBCASE("identity passes through") {
    CHECK(max_diff(matmul(identity(2), sigma_x()), sigma_x()) == 0.0);
  }
  SUBCASE("ladder algebra: sigma+ sigma- projects on up") {
    ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
    expected(0, 0) = 1;
    CHECK(max_diff(matmul(sigma_plus(), sigma_minus()), expected) == 0.0);
  }
  SUBCASE("matches the triple-loop reference on random 4x4 pairs") {
    oracles::Gaussian g(101);
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix a = oracles::random_matrix(4, g);
      const ComplexMatrix b = oracles::random_matrix(4, g);
      CHECK(max_diff(matmul(a, b), oracles::matmul_ref(a, b)) < 1e-12);
    }
  }
  SUBCASE("rejects mismatched shapes") {
    CHECK_THROWS_AS(matmul(ComplexMatrix::Zero(2, 3), ComplexMatrix::Zero(2, 3)),
                    std::invalid_argument);
  }
}

TEST_CASE("dagger") {
  CHECK(max_diff(dagger(sigma_y()), sigma_y()) == 0.0);
  CHECK(max_diff(dagger(sigma_plus()), sigma_minus()) == 0.0);

  oracles::Gaussian g(102);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = oracles::random_matrix(4, g);
    const ComplexMatrix b = oracles::random_matrix(4, g);
    CHECK(max_diff(dagger(matmul(a, b)), matmul(dagger(b), dagger(a))) < 1e-12);
  }
}

TEST_CASE("tensor") {
  SUBCASE("identity factors combine") {
    CHECK(max_diff(tensor(identity(2), identity(2)), identity(4)) == 0.0);
  }
  SUBCASE("basis projectors land on the right diagonal slot") {
    ComplexMatrix up = ComplexMatrix::Zero(2, 2);
    up(0, 0) = 1;
    ComplexMatrix down = ComplexMatrix::Zero(2, 2);
    down(1, 1) = 1;
    const ComplexMatrix p = tensor(up, down);
    // |up down> is index 0*2 + 1 = 1
    for (Eigen::Index i = 0; i < 4; ++i) {
      for (Eigen::Index j = 0; j < 4; ++j) {
        CHECK(p(i, j) == (i == 1 && j == 1 ? Complex{1} : Complex{0}));
      }
    }
  }
  SUBCASE("mixed-product rule (A(x)B)(C(x)D) = AC (x) BD") {
    oracles::Gaussian g(103);
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix a = oracles::random_matrix(2, g);
      const ComplexMatrix b = oracles::random_matrix(2, g);
      const ComplexMatrix c = oracles::random_matrix(2, g);
      const ComplexMatrix d = oracles::random_matrix(2, g);
      CHECK(max_diff(matmul(tensor(a, b), tensor(c, d)),
                     tensor(matmul(a, c), matmul(b, d))) < 1e-12);
    }
  }
  SUBCASE("associative, entrywise exact on integer entries") {
    oracles::Gaussian g(104);
    const ComplexMatrix a = random_int_matrix(2, g);
    const ComplexMatrix b = random_int_matrix(2, g);
    const ComplexMatrix c = random_int_matrix(2, g);
    CHECK(max_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) == 0.0);
  }
}

TEST_CASE("partial_trace") {
  oracles::Gaussian g(105);

  SUBCASE("uncorrelated ancilla comes off cleanly") {
    const ComplexMatrix rho_ab = oracles::random_hermitian(4, g);
    ComplexMatrix up = ComplexMatrix::Zero(2, 2);
    up(0, 0) = 1;
    CHECK(max_diff(partial_trace(tensor(rho_ab, up), {4, 2}, 1), rho_ab) < 1e-14);
  }

  SUBCASE("Bell projector reduces to the maximally mixed qubit") {
    entx::ComplexVector bell = entx::ComplexVector::Zero(4);
    bell(1) = 1.0 / std::sqrt(2.0);
    bell(2) = 1.0 / std::sqrt(2.0);
    const ComplexMatrix projector = bell * bell.adjoint();
    CHECK(max_diff(partial_trace(projector, {2, 2}, 1), identity(2) / 2.0) < 1e-14);
  }

  SUBCASE("matches the index-summation reference on random 8x8 input") {
    for (std::size_t traced = 0; traced < 3; ++traced) {
      const ComplexMatrix m = oracles::random_hermitian(8, g);
      CHECK(max_diff(partial_trace(m, {2, 2, 2}, traced),
                     oracles::partial_trace_ref(m, {2, 2, 2}, traced)) < 1e-13);
    }
  }

  SUBCASE("preserves the trace") {
    const ComplexMatrix m = oracles::random_hermitian(8, g);
    const ComplexMatrix reduced = partial_trace(m, {2, 4}, 0);
    CHECK(std::abs((reduced.trace() - m.trace())) < 1e-13);
  }

  SUBCASE("tracing the right factor of a product leaves a * tr(b)") {
    const ComplexMatrix a = oracles::random_matrix(2, g);
    const ComplexMatrix b = oracles::random_matrix(4, g);
    CHECK(max_diff(partial_trace(tensor(a, b), {2, 4}, 1), a * b.trace()) < 1e-13);
  }

  SUBCASE("rejects bad arguments") {
    const ComplexMatrix m = ComplexMatrix::Zero(8, 8);
    CHECK_THROWS_AS(partial_trace(m, {2, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(m, {2, 2, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::Zero(2, 4), {2, 2}, 0),
                    std::invalid_argument);
  }
}

TEST_CASE("eig_hermitian") {
  SUBCASE("sigma_z spectrum, descending") {
    const auto eig = eig_hermitian(sigma_z());
    CHECK(eig.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(eig.eigenvalues(1) == doctest::Approx(-1.0));
  }

  SUBCASE("sigma_x eigenvectors are the balanced superpositions") {
    const auto eig = eig_hermitian(sigma_x());
    CHECK(eig.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(eig.eigenvalues(1) == doctest::Approx(-1.0));
    for (Eigen::Index col = 0; col < 2; ++col) {
      CHECK(std::abs(eig.eigenvectors(0, col)) == doctest::Approx(1.0 / std::sqrt(2.0)));
      CHECK(std::abs(eig.eigenvectors(1, col)) == doctest::Approx(1.0 / std::sqrt(2.0)));
    }
  }

  SUBCASE("reconstructs random Hermitian input") {
    oracles::Gaussian g(106);
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix m = oracles::random_hermitian(8, g);
      const auto eig = eig_hermitian(m);
      const ComplexMatrix rebuilt =
          eig.eigenvectors *
          eig.eigenvalues.cast<Complex>().asDiagonal() *
          eig.eigenvectors.adjoint();
      CHECK(max_diff(rebuilt, m) < 1e-10);
      CHECK(max_diff(eig.eigenvectors * eig.eigenvectors.adjoint(), identity(8)) < 1e-10);
      for (Eigen::Index k = 1; k < 8; ++k) {
        CHECK(eig.eigenvalues(k) <= eig.eigenvalues(k - 1));
      }
    }
  }

  SUBCASE("PSD input has nonnegative spectrum up to noise") {
    oracles::Gaussian g(107);
    const ComplexMatrix m = oracles::random_matrix(4, g);
    ComplexMatrix gram = m * m.adjoint();
    gram = (gram + gram.adjoint().eval()) / 2.0;
    CHECK(eig_hermitian(gram).eigenvalues.minCoeff() >= -1e-10);
  }

  SUBCASE("rejects non-Hermitian and unsupported dimensions") {
    CHECK_THROWS_AS(eig_hermitian(sigma_plus()), std::invalid_argument);
    CHECK_THROWS_AS(eig_hermitian(ComplexMatrix::Identity(3, 3)), std::invalid_argument);
  }
}

TEST_CASE("matexp_i_hermitian") {
  SUBCASE("zero generator gives the identity") {
    CHECK(max_diff(matexp_i_hermitian(ComplexMatrix::Zero(4, 4), 2.7), identity(4)) == 0.0);
  }

  SUBCASE("half-pi excitation swap picks up the -i phase") {
    // Generator sigma+ (x) sigma- + sigma- (x) sigma+ on two qubits; at
    // theta = pi/2 the excitation hops with amplitude -i.
    const ComplexMatrix swap_gen =
        tensor(sigma_plus(), sigma_minus()) + tensor(sigma_minus(), sigma_plus());
    const ComplexMatrix u = matexp_i_hermitian(swap_gen, M_PI / 2.0);
    // |up down> = index 1, |down up> = index 2
    CHECK(std::abs(u(2, 1) - Complex{0.0, -1.0}) < 1e-12);
    CHECK(std::abs(u(1, 2) - Complex{0.0, -1.0}) < 1e-12);
    CHECK(std::abs(u(1, 1)) < 1e-12);
    CHECK(max_diff(u, oracles::matexp_taylor(swap_gen, M_PI / 2.0)) < 1e-12);
  }

  SUBCASE("matches the Taylor-series reference") {
    oracles::Gaussian g(108);
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix h = oracles::random_hermitian(4, g);
      const double t = g.uniform(-2.0, 2.0);
      CHECK(max_diff(matexp_i_hermitian(h, t), oracles::matexp_taylor(h, t)) < 1e-9);
    }
  }

  SUBCASE("is unitary for random Hermitian generators") {
    oracles::Gaussian g(109);
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix h = oracles::random_hermitian(8, g);
      const ComplexMatrix u = matexp_i_hermitian(h, g.uniform(-3.0, 3.0));
      CHECK(max_diff(u * dagger(u), identity(8)) < 1e-10);
    }
  }

  SUBCASE("rejects non-Hermitian generators") {
    CHECK_THROWS_AS(matexp_i_hermitian(sigma_plus(), 1.0), std::invalid_argument);
  }
}
