#pragma once

#include "cspace/channels.hpp"
#include "cspace/cptp.hpp"
#include "cspace/resource.hpp"

namespace cspace {

/// Orthonormal single-site measurement basis. The angled constructor builds
/// { |alpha_{theta,phi}>, |beta_{theta,phi}>, |2>, ..., |d-1> } with
///   |alpha> = cos(t/2)|0> + e^{i phi} sin(t/2)|1>
///   |beta>  = sin(t/2)|0> - e^{i phi} cos(t/2)|1>
struct MeasurementBasis {
  std::size_t dim = 0;
  std::vector<CVector> vectors;
  // set when constructed from angles
  std::optional<double> theta;
  std::optional<double> phi;

  static MeasurementBasis angled(double theta, double phi, std::size_t d);
  static MeasurementBasis computational(std::size_t d);
  static MeasurementBasis from_vectors(std::vector<CVector> vs);
};

/// Correlation-space Kraus family E_{j,s} = sum_k A[k] <m_s|F_j|k>,
/// indexed by outcome s (outer) and channel Kraus index j (inner).
struct InducedMap {
  std::size_t bond_dim = 0;
  std::size_t phys_dim = 0;
  std::vector<std::vector<CMatrix>> outcomes;
};

/// Both normal forms of the outcome-conditioned map.
struct ConditionalMap {
  std::size_t outcome = 0;
  std::vector<CMatrix> kraus;  // raw E_{j,s}
  CMatrix gram;                // sum_j E†E
  bool zero_branch = false;    // all Kraus elements vanish (probability-0 outcome)

  /// Form (i): each element divided by its operator norm (the pure-state
  /// convention K/||K||). A linear map; trace-preserving iff gram prop. to I.
  SuperOperator operator_normalized() const;

  /// The family rescaled by one common constant c with c^2 = tr(gram)/D, so
  /// the rescaled Gram has unit mean eigenvalue. TP exactly when gram prop. I.
  SuperOperator scale_normalized() const;

  /// Form (ii): rho -> sum_j E rho E† / tr(...). Zero-probability inputs map
  /// to the zero matrix.
  OperationalMap renormalized() const;

  bool trace_preserving(Tolerance tol = Tolerance::verification()) const;
};

/// sum_k A[k] <m|k> (amplitudes conjugated, reproducing the paper's e^{-i phi}).
CMatrix branch_operator(const ResourceMPS& mps, const CVector& m);

InducedMap induced_kraus(const ResourceMPS& mps, const KrausChannel& ch,
                         const MeasurementBasis& basis);

/// || sum_{j,s} E†E - I ||_max
double tp_certificate(const InducedMap& im);

/// The outcome-mixed map rho -> sum_{s,j} E rho E†.
SuperOperator mixed_map(const InducedMap& im);

ConditionalMap per_outcome_map(const InducedMap& im, std::size_t s);

}  // namespace cspace
