#include "cspace/correlation.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cspace;
using namespace testutil;

namespace {

const double kInvRoot3 = 1.0 / std::sqrt(3.0);
const double kInvRoot6 = 1.0 / std::sqrt(6.0);

CMatrix x_times(const CMatrix& m) { return pauli_x() * m; }

}  // namespace

TEST_CASE("measurement basis is orthonormal and carries the paper phases") {
  const MeasurementBasis b = MeasurementBasis::angled(1.2, 0.8, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const cplx g = inner(b.vectors[i], b.vectors[j]);
      CHECK(std::abs(g - (i == j ? cplx(1.0) : cplx(0.0))) < 1e-14);
    }
  // |alpha> carries e^{+i phi} on |1>
  CHECK(std::abs(b.vectors[0][1] -
                 std::exp(cplx(0.0, 0.8)) * cplx(std::sin(0.6))) < 1e-14);
  CHECK_THROWS_AS(MeasurementBasis::angled(0.0, 0.0, 3), std::invalid_argument);
}

TEST_CASE("branch_operator on computational outcomes returns the tensors") {
  const ResourceMPS m = aklt();
  const MeasurementBasis comp = MeasurementBasis::computational(3);
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(close(branch_operator(m, comp.vectors[k]), m.tensors[k], 0.0));
}

TEST_CASE("AKLT alpha branch at (pi/2, pi/2) is X(1 - iZ)/sqrt(6)") {
  const ResourceMPS m = aklt();
  const MeasurementBasis b = MeasurementBasis::angled(M_PI / 2.0, M_PI / 2.0, 3);
  const CMatrix branch = branch_operator(m, b.vectors[0]);
  const CMatrix expect =
      cplx(kInvRoot6) * x_times(CMatrix::identity(2) - cplx(0.0, 1.0) * pauli_z());
  CHECK(close(branch, expect, 1e-14));
  const auto scale = unitary_up_to_scale(branch);
  REQUIRE(scale.has_value());
  CHECK(close(*scale, kInvRoot3, 1e-12));
}

TEST_CASE("AKLT alpha branch at (pi/2, 0) is rank one") {
  const ResourceMPS m = aklt();
  const MeasurementBasis b = MeasurementBasis::angled(M_PI / 2.0, 0.0, 3);
  const CMatrix branch = branch_operator(m, b.vectors[0]);
  // X(1+Z)/sqrt(6) = (2/sqrt6) X |0><0|
  const CMatrix expect =
      cplx(2.0 * kInvRoot6) *
      x_times(outer(CVector::basis(2, 0), CVector::basis(2, 0)));
  CHECK(close(branch, expect, 1e-14));
  CHECK_FALSE(unitary_up_to_scale(branch).has_value());
}

TEST_CASE("induced_kraus with the identity channel returns branch operators") {
  const ResourceMPS m = aklt();
  const InducedMap im =
      induced_kraus(m, identity_channel(3), MeasurementBasis::computational(3));
  for (std::size_t k = 0; k < 3; ++k) {
    REQUIRE(im.outcomes[k].size() == 1);
    CHECK(close(im.outcomes[k][0], m.tensors[k], 0.0));
  }
}

TEST_CASE("induced_kraus of AKLT + f1 matches the closed forms") {
  const ResourceMPS m = aklt();
  const double theta = 1.1, phi = 2.3;
  const InducedMap im = induced_kraus(m, f1_error(theta, phi),
                                      MeasurementBasis::angled(theta, phi, 3));
  const CVector e0 = CVector::basis(2, 0), e1 = CVector::basis(2, 1);

  // outcome alpha: (A[0]-A[1])/sqrt2 = sqrt(2/3) X |1><1|
  const CMatrix expect_alpha = cplx(std::sqrt(2.0 / 3.0)) * x_times(outer(e1, e1));
  CHECK(close(im.outcomes[0][0], expect_alpha, 1e-14));
  // outcome beta: (A[0]+A[1])/sqrt2 = sqrt(2/3) X |0><0|
  const CMatrix expect_beta = cplx(std::sqrt(2.0 / 3.0)) * x_times(outer(e0, e0));
  CHECK(close(im.outcomes[1][0], expect_beta, 1e-14));
  // outcome 2: A[2]
  CHECK(close(im.outcomes[2][0], m.tensors[2], 1e-14));
}

TEST_CASE("tp_certificate vanishes for complete channels on complete resources") {
  const ResourceMPS m = aklt();
  CHECK(tp_certificate(induced_kraus(m, identity_channel(3),
                                     MeasurementBasis::computational(3))) <= 1e-15);
  const double theta = 0.9, phi = 5.1;
  CHECK(tp_certificate(induced_kraus(m, f1_error(theta, phi),
                                     MeasurementBasis::angled(theta, phi, 3))) <=
        1e-12);
}

TEST_CASE("tp_certificate stays below 1e-9 for random channel/resource pairs") {
  Rng rng(77);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t d = 2 + seed % 3;
    const double theta = 0.2 + 2.6 * rng.uniform();
    const double phi = 2.0 * M_PI * rng.uniform();
    const ResourceMPS m = random_resource(d, 2, theta, phi, seed);
    const KrausChannel ch = random_cptp(d, 1 + seed % 3, seed + 1000);
    const MeasurementBasis basis =
        MeasurementBasis::angled(0.2 + 2.6 * rng.uniform(),
                                 2.0 * M_PI * rng.uniform(), d);
    CHECK(tp_certificate(induced_kraus(m, ch, basis)) <= 1e-9);
  }
}

TEST_CASE("tp_certificate is basis independent") {
  const ResourceMPS m = aklt();
  const KrausChannel ch = random_cptp(3, 2, 4);
  Rng rng(8);
  double lo = 1e300, hi = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const MeasurementBasis basis = MeasurementBasis::angled(
        0.2 + 2.6 * rng.uniform(), 2.0 * M_PI * rng.uniform(), 3);
    const double dev = tp_certificate(induced_kraus(m, ch, basis));
    lo = std::min(lo, dev);
    hi = std::max(hi, dev);
  }
  CHECK(hi - lo <= 1e-10);
}

TEST_CASE("single-Kraus induced operators equal the branch of F†|m_s>") {
  const ResourceMPS m = aklt();
  const KrausChannel ch = swap_error(0, 2, 3);
  const MeasurementBasis basis = MeasurementBasis::angled(0.7, 1.9, 3);
  const InducedMap im = induced_kraus(m, ch, basis);
  for (std::size_t s = 0; s < 3; ++s) {
    const CVector pulled = dagger(ch.kraus[0]) * basis.vectors[s];
    CHECK(close(im.outcomes[s][0], branch_operator(m, pulled), 1e-14));
  }
}

TEST_CASE("mixed_map with identity channel equals the bare Kraus map") {
  const ResourceMPS m = aklt();
  Rng rng(12);
  const MeasurementBasis basis = MeasurementBasis::angled(
      0.2 + 2.6 * rng.uniform(), 2.0 * M_PI * rng.uniform(), 3);
  const SuperOperator induced = mixed_map(induced_kraus(m, identity_channel(3), basis));
  const SuperOperator direct = SuperOperator::from_kraus(m.tensors);
  CHECK(frobenius_distance(choi(induced).matrix, choi(direct).matrix) <= 1e-12);
}

TEST_CASE("per_outcome_map on AKLT singles out the expected operators") {
  const ResourceMPS m = aklt();

  SUBCASE("identity channel, computational outcome 2 gives Z") {
    const InducedMap im =
        induced_kraus(m, identity_channel(3), MeasurementBasis::computational(3));
    const ConditionalMap cm = per_outcome_map(im, 2);
    CHECK(cm.trace_preserving());
    const SuperOperator normalized = cm.operator_normalized();
    CHECK(close(normalized.kraus[0], pauli_z(), 1e-12));
  }

  SUBCASE("swap 1<->2 error, outcome |2> gives XZ") {
    const InducedMap im = induced_kraus(m, swap_error(1, 2, 3),
                                        MeasurementBasis::angled(1.0, 0.4, 3));
    const ConditionalMap cm = per_outcome_map(im, 2);
    CHECK(cm.trace_preserving());
    CHECK(close(cm.operator_normalized().kraus[0], pauli_x() * pauli_z(), 1e-12));
  }

  SUBCASE("f1 error, outcome alpha is a non-TP rank-one conditional") {
    const double theta = 1.3, phi = 0.9;
    const InducedMap im = induced_kraus(m, f1_error(theta, phi),
                                        MeasurementBasis::angled(theta, phi, 3));
    const ConditionalMap cm = per_outcome_map(im, 0);
    CHECK_FALSE(cm.trace_preserving());
    const CVector e1 = CVector::basis(2, 1);
    CHECK(close(cm.gram, cplx(2.0 / 3.0) * outer(e1, e1), 1e-14));
  }
}

TEST_CASE("per-outcome TP agrees between the Gram test and is_tp") {
  const ResourceMPS m = aklt();
  const std::vector<KrausChannel> channels = {identity_channel(3), swap_error(1, 2, 3),
                                              f1_error(0.8, 0.8), random_cptp(3, 2, 3)};
  const MeasurementBasis basis = MeasurementBasis::angled(0.8, 0.8, 3);
  for (const auto& ch : channels) {
    const InducedMap im = induced_kraus(m, ch, basis);
    for (std::size_t s = 0; s < 3; ++s) {
      const ConditionalMap cm = per_outcome_map(im, s);
      if (cm.zero_branch) continue;
      CHECK(cm.trace_preserving() == is_tp(cm.scale_normalized(), Tolerance(1e-9)));
    }
  }
}

TEST_CASE("probability-zero outcome branches are signaled") {
  // Resource whose A[2] = 0 makes the |2> outcome unreachable under identity.
  ResourceMPS m = aklt();
  m.tensors[2] = CMatrix(2, 2);
  const InducedMap im =
      induced_kraus(m, identity_channel(3), MeasurementBasis::computational(3));
  const ConditionalMap cm = per_outcome_map(im, 2);
  CHECK(cm.zero_branch);
  CHECK_THROWS_AS(cm.operator_normalized(), std::runtime_error);
}
