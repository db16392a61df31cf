#include "cspace/theorem.hpp"

#include <cmath>

namespace cspace {

namespace {

constexpr double kWitnessThreshold = 1e-6;

/// || G / lambda_max(G) - I ||_max for a Gram matrix G; 0 for the zero matrix.
double normalized_gram_deviation(const CMatrix& gram) {
  const auto eigs = hermitian_eigenvalues(gram);
  const double top = eigs.back();
  if (top <= 1e-14) return 0.0;
  return max_abs_diff(cplx(1.0 / top) * gram, CMatrix::identity(gram.rows));
}

/// Scale gamma with ||M|| = sqrt(gamma): the unitary scale when it exists,
/// the operator norm otherwise.
std::pair<double, std::string> norm_scale(const CMatrix& m) {
  if (auto c = unitary_up_to_scale(m)) return {*c * *c, "unitary_scale"};
  const double n = operator_norm(m);
  return {n * n, "operator_norm"};
}

CMatrix traceless_part(const CMatrix& m) {
  const cplx mean = trace(m) / static_cast<double>(m.rows);
  return m - mean * CMatrix::identity(m.rows);
}

}  // namespace

ResidualReport check_error1(const ResourceMPS& mps, double theta, double phi) {
  (void)theta;
  (void)phi;  // the |2> outcome of U_{1<->2} conditions on A[1] for every basis
  mps.check();
  if (mps.d < 3) throw std::invalid_argument("check_error1: needs d >= 3");
  ResidualReport rep;
  const CMatrix& a1 = mps.tensors[1];
  const CMatrix gram = dagger(a1) * a1;
  if (auto c = proportionality_to_identity(gram)) rep.eta = c->real();
  rep.tp_deviation = normalized_gram_deviation(gram);
  rep.norm_used = unitary_up_to_scale(a1) ? "unitary_scale" : "operator_norm";
  return rep;
}

ResidualReport check_e3(const ResourceMPS& mps, double theta, double phi,
                        std::size_t s) {
  mps.check();
  if (mps.d < 3) throw std::invalid_argument("check_e3: needs d >= 3");
  const double w = 2.0 * M_PI / static_cast<double>(mps.d);
  const double sw = static_cast<double>(s) * w;
  const double ct = std::cos(theta / 2.0);
  const double st = std::sin(theta / 2.0);

  const CMatrix& a1 = mps.tensors[1];
  const CMatrix& a2 = mps.tensors[2];

  // Outcome-alpha operator of (U_{0<->2} V^s)-corrupted measurement:
  //   e^{-2 i s w} cos(t/2) A[2] + e^{-i (phi + s w)} sin(t/2) A[1]
  const CMatrix op = std::exp(cplx(0.0, -2.0 * sw)) * (cplx(ct) * a2) +
                     std::exp(cplx(0.0, -(phi + sw))) * (cplx(st) * a1);

  ResidualReport rep;
  if (auto c = proportionality_to_identity(dagger(a1) * a1)) rep.eta = c->real();
  if (auto c = proportionality_to_identity(dagger(a2) * a2)) rep.xi = c->real();

  const auto [gamma, which] = norm_scale(op);
  rep.gamma = gamma;
  rep.norm_used = which;

  const cplx ph = std::exp(cplx(0.0, -(phi - sw)));
  const CMatrix cross = ph * (dagger(a2) * a1) + std::conj(ph) * (dagger(a1) * a2);
  rep.residual_e3 = traceless_part(cross);
  if (rep.eta && rep.xi)
    rep.gamma_prime =
        2.0 / std::sin(theta) * (gamma - *rep.xi * ct * ct - *rep.eta * st * st);

  const CMatrix gram = dagger(op) * op;
  rep.tp_deviation = max_abs_diff(cplx(1.0 / gamma) * gram, CMatrix::identity(mps.D));
  return rep;
}

ResidualReport check_e4(const ResourceMPS& mps, double theta, double phi,
                        std::size_t t) {
  mps.check();
  if (mps.d < 3) throw std::invalid_argument("check_e4: needs d >= 3");
  const double w = 2.0 * M_PI / static_cast<double>(mps.d);
  const double tw = static_cast<double>(t) * w;
  const double ct = std::cos(theta / 2.0);
  const double st = std::sin(theta / 2.0);

  const CMatrix& a1 = mps.tensors[1];
  const CMatrix& a2 = mps.tensors[2];

  // Outcome-alpha operator of (U_{0<->1} U_{0<->2} V^t)-corrupted measurement:
  //   e^{-i t w} cos(t/2) A[1] + e^{-i phi - 2 i t w} sin(t/2) A[2]
  const CMatrix op = std::exp(cplx(0.0, -tw)) * (cplx(ct) * a1) +
                     std::exp(cplx(0.0, -phi - 2.0 * tw)) * (cplx(st) * a2);

  ResidualReport rep;
  if (auto c = proportionality_to_identity(dagger(a1) * a1)) rep.eta = c->real();
  if (auto c = proportionality_to_identity(dagger(a2) * a2)) rep.xi = c->real();

  const auto [delta, which] = norm_scale(op);
  rep.delta = delta;
  rep.norm_used = which;

  const cplx ph = std::exp(cplx(0.0, phi + tw));
  const CMatrix cross = ph * (dagger(a2) * a1) + std::conj(ph) * (dagger(a1) * a2);
  rep.residual_e4 = traceless_part(cross);
  if (rep.eta && rep.xi)
    rep.delta_prime =
        2.0 / std::sin(theta) * (delta - *rep.xi * st * st - *rep.eta * ct * ct);

  const CMatrix gram = dagger(op) * op;
  rep.tp_deviation = max_abs_diff(cplx(1.0 / delta) * gram, CMatrix::identity(mps.D));
  return rep;
}

std::optional<int> phase_condition(double phi, int s, int t, std::size_t d) {
  const double w = 2.0 * M_PI / static_cast<double>(d);
  const double value = 2.0 * phi + static_cast<double>(t - s) * w;
  const double ratio = value / M_PI;
  const int r = static_cast<int>(std::lround(ratio));
  if (std::abs(value - static_cast<double>(r) * M_PI) <= 1e-9) return r;
  return std::nullopt;
}

std::vector<double> default_theta_grid() {
  std::vector<double> g;
  for (int k = 1; k <= 8; ++k) g.push_back(static_cast<double>(k) * M_PI / 9.0);
  return g;
}

std::vector<double> default_phi_grid() {
  std::vector<double> g;
  for (int k = 0; k <= 15; ++k) g.push_back(static_cast<double>(k) * M_PI / 8.0);
  return g;
}

namespace {

struct FamilyError {
  KrausChannel channel;
  std::string proof_step;
  int s = -1;
  int t = -1;
};

std::vector<FamilyError> proof_error_families(std::size_t d) {
  std::vector<FamilyError> out;
  if (d < 3) return out;  // the proof's errors act on levels 0..2
  out.push_back({swap_error(1, 2, d), "error1", -1, -1});
  for (std::size_t s = 0; s < d; ++s) {
    const CMatrix u = swap_error(0, 2, d).kraus[0] * phase_error(d, s).kraus[0];
    out.push_back({KrausChannel(d, {u}), "e3", static_cast<int>(s), -1});
  }
  for (std::size_t t = 0; t < d; ++t) {
    const CMatrix u = swap_error(0, 1, d).kraus[0] * swap_error(0, 2, d).kraus[0] *
                      phase_error(d, t).kraus[0];
    out.push_back({KrausChannel(d, {u}), "e4", -1, static_cast<int>(t)});
  }
  return out;
}

}  // namespace

std::optional<Witness> find_nontp_witness(const ResourceMPS& mps,
                                          const std::vector<double>& theta_grid,
                                          const std::vector<double>& phi_grid) {
  mps.check();
  const auto families = proof_error_families(mps.d);
  for (const double theta : theta_grid) {
    for (const double phi : phi_grid) {
      // Only attribute a violation to the error when the uncorrupted
      // measurement at these angles implements unitaries.
      if (!validate(mps, theta, phi).valid()) continue;
      const MeasurementBasis basis = MeasurementBasis::angled(theta, phi, mps.d);
      for (const auto& fam : families) {
        const InducedMap im = induced_kraus(mps, fam.channel, basis);
        for (std::size_t outcome = 0; outcome < mps.d; ++outcome) {
          const CMatrix& e = im.outcomes[outcome][0];
          if (max_abs(e) <= 1e-14) continue;  // probability-0 branch
          const double violation = normalized_gram_deviation(dagger(e) * e);
          if (violation > kWitnessThreshold) {
            Witness w{fam.channel, theta, phi, outcome, violation, fam.proof_step,
                      fam.s, fam.t};
            return w;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace cspace
