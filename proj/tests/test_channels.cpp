#include "cspace/channels.hpp"

#include "cspace/oracle.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace cspace;
using namespace testutil;

TEST_CASE("swap_error(1,2,3) is the right permutation") {
  const KrausChannel ch = swap_error(1, 2, 3);
  REQUIRE(ch.rank() == 1);
  CMatrix expect(3, 3);
  expect(0, 0) = 1.0;
  expect(1, 2) = 1.0;
  expect(2, 1) = 1.0;
  CHECK(close(ch.kraus[0], expect, 0.0));
  // involution
  CHECK(close(ch.kraus[0] * ch.kraus[0], CMatrix::identity(3), 0.0));
  CHECK_THROWS_AS(swap_error(1, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(swap_error(0, 3, 3), std::invalid_argument);
}

TEST_CASE("phase_error diagonal") {
  const double w = 2.0 * M_PI / 3.0;
  const KrausChannel ch = phase_error(3, 1);
  for (std::size_t p = 0; p < 3; ++p) {
    const cplx expect = std::exp(cplx(0.0, -w * static_cast<double>(p)));
    CHECK(std::abs(ch.kraus[0](p, p) - expect) < 1e-15);
  }
  CHECK(close(phase_error(3, 0).kraus[0], CMatrix::identity(3), 0.0));
  // V^d = I
  const CMatrix v = phase_error(5, 1).kraus[0];
  CMatrix acc = CMatrix::identity(5);
  for (int i = 0; i < 5; ++i) acc = acc * v;
  CHECK(close(acc, CMatrix::identity(5), 1e-12));
}

TEST_CASE("basis_rotation maps |0> to |+> at (pi/2, 0) and fixes |2> for d=3") {
  const CMatrix u2 = basis_rotation(M_PI / 2.0, 0.0, 2);
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix expect(2, 2);
  expect(0, 0) = s;
  expect(1, 0) = s;
  expect(0, 1) = s;
  expect(1, 1) = -s;
  CHECK(close(u2, expect, 1e-15));
  CHECK(close(dagger(u2) * u2, CMatrix::identity(2), 1e-12));

  const CMatrix u3 = basis_rotation(1.1, 2.2, 3);
  CHECK(close(dagger(u3) * u3, CMatrix::identity(3), 1e-12));
  CVector e2 = CVector::basis(3, 2);
  CHECK(max_abs_diff(u3 * e2, e2) <= 1e-15);
}

TEST_CASE("f1_error matrix elements against the measurement basis") {
  Rng rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const double theta = 0.2 + 2.6 * rng.uniform();
    const double phi = 2.0 * M_PI * rng.uniform();
    const KrausChannel ch = f1_error(theta, phi);
    const MeasurementBasis basis = MeasurementBasis::angled(theta, phi, 3);
    const CMatrix& f = ch.kraus[0];

    const auto bra_f_ket = [&](const CVector& m, std::size_t k) {
      cplx acc = 0.0;
      for (std::size_t l = 0; l < 3; ++l) acc += std::conj(m[l]) * f(l, k);
      return acc;
    };
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(bra_f_ket(basis.vectors[0], 0) - cplx(s)) < 1e-12);
    CHECK(std::abs(bra_f_ket(basis.vectors[0], 1) - cplx(-s)) < 1e-12);
    // F_1 |2> = |2>
    CVector e2 = CVector::basis(3, 2);
    CHECK(max_abs_diff(f * e2, e2) <= 1e-12);
  }
  CHECK_THROWS_AS(f1_error(1.0, 0.0, 2), std::invalid_argument);
}

TEST_CASE("random_cptp satisfies completeness for 100 seeds") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t d = 2 + seed % 3;
    const std::size_t w = 1 + seed % 4;
    const KrausChannel ch = random_cptp(d, w, seed);  // constructor checks the sum
    CHECK(ch.rank() == w);
  }
}

TEST_CASE("random_cptp with rank 1 is unitary") {
  const KrausChannel ch = random_cptp(3, 1, 5);
  CHECK(close(dagger(ch.kraus[0]) * ch.kraus[0], CMatrix::identity(3), 1e-12));
}

TEST_CASE("fixed seed reproduces the identical Kraus set") {
  const KrausChannel a = random_cptp(3, 2, 99);
  const KrausChannel b = random_cptp(3, 2, 99);
  for (std::size_t j = 0; j < 2; ++j) CHECK(close(a.kraus[j], b.kraus[j], 0.0));
}

TEST_CASE("channel constructor rejects incomplete families") {
  CMatrix half = cplx(0.5) * CMatrix::identity(2);
  CHECK_THROWS_AS(KrausChannel(2, {half}), std::invalid_argument);
}

TEST_CASE("unitary channels preserve dense state norms") {
  const ResourceMPS m = aklt(3);
  const DenseState state = to_dense(m);
  const DenseDensity rho = DenseDensity::pure(state);
  const std::vector<KrausChannel> unitaries = {swap_error(1, 2, 3), phase_error(3, 2)};
  for (const auto& ch : unitaries) {
    const DenseDensity out = apply_channel_at(rho, 2, ch);
    CHECK(close(out.trace_real(), 1.0, 1e-12));
  }
}
