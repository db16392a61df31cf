#include "cspace/linalg.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cspace;
using namespace testutil;

TEST_CASE("dagger on hand-picked matrices") {
  CHECK(close(dagger(CMatrix::identity(2)), CMatrix::identity(2)));

  CMatrix nilpotent(2, 2);
  nilpotent(0, 1) = 1.0;
  CMatrix flipped(2, 2);
  flipped(1, 0) = 1.0;
  CHECK(close(dagger(nilpotent), flipped));

  CMatrix m(2, 2);
  m(0, 0) = cplx(1.0, 2.0);
  m(0, 1) = cplx(0.0, -1.0);
  m(1, 0) = 3.0;
  m(1, 1) = cplx(-2.0, 0.5);
  CHECK(m(0, 1) == std::conj(dagger(m)(1, 0)));
}

TEST_CASE("dagger is an involution on random matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix m = random_gaussian_matrix(3, 3, rng);
    CHECK(close(dagger(dagger(m)), m, 0.0));
  }
}

TEST_CASE("kron basics") {
  CHECK(close(kron(CMatrix::identity(2), CMatrix::identity(2)), CMatrix::identity(4)));

  const CMatrix d = diag2(1.0, 2.0);
  CMatrix expect(4, 4);
  expect(0, 0) = 1.0;
  expect(1, 1) = 1.0;
  expect(2, 2) = 2.0;
  expect(3, 3) = 2.0;
  CHECK(close(kron(d, CMatrix::identity(2)), expect));
}

TEST_CASE("kron against the index formula") {
  const CMatrix a = pauli_x();
  const CMatrix b = pauli_z();
  const CMatrix k = kron(a, b);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(k(i, j) == a(i / 2, j / 2) * b(i % 2, j % 2));
}

TEST_CASE("kron is associative") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix a = random_gaussian_matrix(2, 2, rng);
    const CMatrix b = random_gaussian_matrix(2, 3, rng);
    const CMatrix c = random_gaussian_matrix(3, 2, rng);
    CHECK(close(kron(kron(a, b), c), kron(a, kron(b, c)), 1e-12));
  }
}

TEST_CASE("is_hermitian_psd") {
  CHECK(is_hermitian_psd(CMatrix::identity(4)));
  CHECK_FALSE(is_hermitian_psd(diag2(1.0, -1.0)));
  CHECK_THROWS_AS(is_hermitian_psd(CMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("Gram matrices are PSD for 200 seeds") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const CMatrix g = random_gaussian_matrix(3, 3, rng);
    CHECK(is_hermitian_psd(dagger(g) * g));
  }
}

TEST_CASE("proportionality_to_identity") {
  const auto c = proportionality_to_identity(cplx(3.0) * CMatrix::identity(2));
  REQUIRE(c.has_value());
  CHECK(close(c->real(), 3.0));

  CHECK_FALSE(proportionality_to_identity(diag2(1.0, 2.0)).has_value());

  // AKLT's A[1] = XZ/sqrt(3): A†[1]A[1] = I/3
  const CMatrix a1 = cplx(1.0 / std::sqrt(3.0)) * (pauli_x() * pauli_z());
  const auto eta = proportionality_to_identity(dagger(a1) * a1);
  REQUIRE(eta.has_value());
  CHECK(close(eta->real(), 1.0 / 3.0));
}

TEST_CASE("unitary_up_to_scale") {
  const auto c = unitary_up_to_scale(cplx(1.0 / std::sqrt(3.0)) * pauli_x());
  REQUIRE(c.has_value());
  CHECK(close(*c, 1.0 / std::sqrt(3.0)));

  CVector e0 = CVector::basis(2, 0);
  CHECK_FALSE(unitary_up_to_scale(outer(e0, e0)).has_value());
}

TEST_CASE("unitary_up_to_scale recovers the scale of QR unitaries") {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const double scale = 0.1 + 2.0 * rng.uniform();
    const CMatrix u = random_unitary(3, rng);
    const auto c = unitary_up_to_scale(cplx(scale) * u, Tolerance(1e-10));
    REQUIRE(c.has_value());
    CHECK(close(*c, scale, 1e-10));
  }
  Rng rng2(7);
  const auto c = unitary_up_to_scale(cplx(0.7) * random_unitary(4, rng2));
  REQUIRE(c.has_value());
  CHECK(close(*c, 0.7, 1e-10));
}

TEST_CASE("random_unitary is unitary and seed-stable") {
  Rng a(123), b(123);
  const CMatrix u = random_unitary(3, a);
  const CMatrix v = random_unitary(3, b);
  CHECK(close(u, v, 0.0));
  CHECK(close(dagger(u) * u, CMatrix::identity(3), 1e-12));
}

TEST_CASE("operator_norm is the largest singular value") {
  CHECK(close(operator_norm(diag2(0.5, -2.0)), 2.0, 1e-12));
  CHECK(close(operator_norm(pauli_x()), 1.0, 1e-12));
}

TEST_CASE("pseudo_inverse solves tall least-squares exactly on full-rank input") {
  Rng rng(3);
  const CMatrix a = random_gaussian_matrix(6, 2, rng);
  double cond = 0.0;
  const CMatrix pinv = pseudo_inverse(a, &cond);
  CHECK(cond < 1e3);
  CHECK(close(pinv * a, CMatrix::identity(2), 1e-12));
}

TEST_CASE("Tolerance rejects negative eps") {
  CHECK_THROWS_AS(Tolerance(-1.0), std::invalid_argument);
}
