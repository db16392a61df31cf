#pragma once

#include "cspace/correlation.hpp"

namespace cspace {

/// Numbers produced by replaying one proof step on a concrete resource.
/// eta and xi are present when A†[1]A[1] resp. A†[2]A[2] are proportional
/// to the identity. residual_* hold the traceless part of the cross-term
/// matrix whose properness the corresponding step requires.
struct ResidualReport {
  std::optional<double> eta;
  std::optional<double> xi;
  std::optional<double> gamma;
  std::optional<double> gamma_prime;
  std::optional<double> delta;
  std::optional<double> delta_prime;
  std::optional<CMatrix> residual_e3;
  std::optional<CMatrix> residual_e4;
  double tp_deviation = 0.0;
  /// "unitary_scale" when the conditioned operator was unitary up to scale,
  /// otherwise "operator_norm".
  std::string norm_used;
};

/// A concrete (error, measurement, outcome) whose conditional correlation-space
/// operation fails trace preservation.
struct Witness {
  KrausChannel channel;
  double theta = 0.0;
  double phi = 0.0;
  std::size_t outcome = 0;
  double violation = 0.0;      // || gram / lambda_max(gram) - I ||_max
  std::string proof_step;      // "error1", "e3", "e4"
  int s = -1;                  // phase power for e3
  int t = -1;                  // phase power for e4
};

/// Swap error U_{1<->2}, outcome |2>: the conditioned operator is A[1]; checks
/// A†[1]A[1] = eta I.
ResidualReport check_error1(const ResourceMPS& mps, double theta, double phi);

/// Error U_{0<->2} V^s, outcome alpha. Reports gamma, gamma', the traceless
/// remainder of e^{-i(phi - s w)} A†[2]A[1] + h.c., and the TP deviation of the
/// normalized conditioned operator.
ResidualReport check_e3(const ResourceMPS& mps, double theta, double phi, std::size_t s);

/// Error U_{0<->1} U_{0<->2} V^t, outcome alpha; same bookkeeping with
/// e^{i(phi + t w)} A†[2]A[1] + h.c.
ResidualReport check_e4(const ResourceMPS& mps, double theta, double phi, std::size_t t);

/// Integer r with 2 phi + (t - s) * (2 pi / d) = r pi, within 1e-9.
std::optional<int> phase_condition(double phi, int s, int t, std::size_t d);

std::vector<double> default_theta_grid();  // k pi / 9, k = 1..8
std::vector<double> default_phi_grid();    // k pi / 8, k = 0..15

/// Sweeps the three proof-error families over the grid and all outcomes,
/// restricted to measurement settings where the resource assumption holds, and
/// returns the first conditional operation whose normalized Gram strays from
/// the identity by more than 1e-6.
std::optional<Witness> find_nontp_witness(const ResourceMPS& mps,
                                          const std::vector<double>& theta_grid,
                                          const std::vector<double>& phi_grid);

}  // namespace cspace
